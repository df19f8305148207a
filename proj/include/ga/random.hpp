#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ga/algebra.hpp"
#include "ga/atoms.hpp"

namespace ga {

/// Seeded generator of test inputs. Rationals have numerators in
/// [-max_num, max_num] and denominators in [1, max_den].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long max_num = 8, long max_den = 8)
      : rng_(seed), max_num_(max_num), max_den_(max_den) {}

  std::size_t index(std::size_t bound);
  bool coin();
  Rational rational();
  Rational nonnegative_rational();
  Gamble gamble(PossibilitySpace space);
  /// A nonzero gamble.
  Gamble nonzero_gamble(PossibilitySpace space);
  std::vector<Gamble> gamble_set(PossibilitySpace space, std::size_t max_count);
  Partition partition(PossibilitySpace space);
  /// A coherent element supported by x: the closure of up to `extras`
  /// x-measurable gambles, skipping any that would cause contradiction.
  PhiElement coherent(const Partition& x, std::size_t extras);
  PhiElement coherent(PossibilitySpace space, std::size_t extras) { return coherent(Partition::top(space), extras); }
  /// A probability mass function with rational entries.
  Vec pmf(std::size_t n);
  /// A full-rank chain: random pmfs, then point masses until full rank.
  std::vector<Vec> chain(std::size_t n, std::size_t random_links);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long max_num_;
  long max_den_;
};

}  // namespace ga
