#include "ga/gamble.hpp"

#include <algorithm>

namespace ga {

Gamble::Gamble(Vec values) : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("gamble over an empty space");
}

Gamble Gamble::zero(PossibilitySpace space) { return Gamble(Vec(space.size(), Rational(0))); }

Gamble Gamble::unit(PossibilitySpace space, World w) {
  Vec v(space.size(), Rational(0));
  v.at(w) = 1;
  return Gamble(std::move(v));
}

Gamble Gamble::indicator(PossibilitySpace space, std::span<const World> worlds) {
  Vec v(space.size(), Rational(0));
  for (World w : worlds) v.at(w) = 1;
  return Gamble(std::move(v));
}

Gamble Gamble::lift(const Partition& x, const Vec& block_values) {
  if (block_values.size() != x.block_count()) throw PreconditionError("lift: one value per block expected");
  Vec v(x.space().size());
  for (World w = 0; w < v.size(); ++w) v[w] = block_values[x.block_of(w)];
  return Gamble(std::move(v));
}

bool Gamble::is_positive() const {
  bool some = false;
  for (const auto& q : values_) {
    if (sgn(q) < 0) return false;
    some = some || sgn(q) > 0;
  }
  return some;
}

Gamble Gamble::operator-() const {
  Vec v(values_);
  for (auto& q : v) q = -q;
  return Gamble(std::move(v));
}

Gamble Gamble::operator+(const Gamble& other) const {
  require_same_space(space(), other.space(), "gamble +");
  Vec v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return Gamble(std::move(v));
}

Gamble Gamble::operator-(const Gamble& other) const { return *this + (-other); }

Gamble Gamble::scaled(const Rational& factor) const {
  Vec v(values_);
  for (auto& q : v) q *= factor;
  return Gamble(std::move(v));
}

bool is_measurable(const Gamble& f, const Partition& x) {
  require_same_space(f.space(), x.space(), "is_measurable");
  return std::all_of(x.blocks().begin(), x.blocks().end(), [&](const std::vector<World>& block) {
    return std::all_of(block.begin(), block.end(), [&](World w) { return f[w] == f[block.front()]; });
  });
}

MeasurableSubspace::MeasurableSubspace(Partition x) : partition(std::move(x)) {
  for (const auto& block : partition.blocks()) basis.push_back(Gamble::indicator(partition.space(), block));
}

}  // namespace ga
