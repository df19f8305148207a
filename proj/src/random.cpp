#include "ga/random.hpp"

namespace ga {

std::size_t Sampler::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

bool Sampler::coin() { return index(2) == 1; }

Rational Sampler::rational() {
  const long num = std::uniform_int_distribution<long>(-max_num_, max_num_)(rng_);
  const long den = std::uniform_int_distribution<long>(1, max_den_)(rng_);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational Sampler::nonnegative_rational() {
  const long num = std::uniform_int_distribution<long>(0, max_num_)(rng_);
  const long den = std::uniform_int_distribution<long>(1, max_den_)(rng_);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Gamble Sampler::gamble(PossibilitySpace space) {
  Vec v(space.size());
  for (auto& e : v) e = rational();
  return Gamble(std::move(v));
}

Gamble Sampler::nonzero_gamble(PossibilitySpace space) {
  for (;;) {
    auto g = gamble(space);
    if (!g.is_zero()) return g;
  }
}

std::vector<Gamble> Sampler::gamble_set(PossibilitySpace space, std::size_t max_count) {
  const std::size_t count = 1 + index(max_count);
  std::vector<Gamble> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(nonzero_gamble(space));
  return out;
}

Partition Sampler::partition(PossibilitySpace space) {
  // Random restricted growth string.
  std::vector<std::size_t> labels(space.size(), 0);
  std::size_t used = 1;
  for (std::size_t w = 1; w < space.size(); ++w) {
    labels[w] = index(used + 1);
    if (labels[w] == used) ++used;
  }
  return Partition::from_labels(labels);
}

PhiElement Sampler::coherent(const Partition& x, std::size_t extras) {
  const PossibilitySpace space = x.space();
  std::vector<Gamble> kept;
  for (std::size_t i = 0; i < extras; ++i) {
    Vec block_values(x.block_count());
    for (auto& e : block_values) e = rational();
    Gamble g = Gamble::lift(x, block_values);
    if (g.is_zero()) continue;
    kept.push_back(std::move(g));
    if (natural_extension(space, kept).is_top()) kept.pop_back();
  }
  return closure(space, kept);
}

Vec Sampler::pmf(std::size_t n) {
  Vec v(n);
  Rational total = 0;
  for (auto& e : v) {
    e = nonnegative_rational();
    total += e;
  }
  if (total == 0) {
    v[index(n)] = 1;
    return v;
  }
  for (auto& e : v) e /= total;
  return v;
}

std::vector<Vec> Sampler::chain(std::size_t n, std::size_t random_links) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < random_links; ++i) {
    auto p = pmf(n);
    out.push_back(p);
    if (rank(out) < out.size()) out.pop_back();
  }
  for (std::size_t w = 0; w < n && rank(out) < n; ++w) {
    Vec e(n, Rational(0));
    e[w] = 1;
    out.push_back(e);
    if (rank(out) < out.size()) out.pop_back();
  }
  return out;
}

}  // namespace ga
