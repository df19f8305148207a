#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ga/partition.hpp"
#include "ga/rational.hpp"

namespace ga {

/// An exact rational reward per world.
class Gamble {
 public:
  explicit Gamble(Vec values);
  static Gamble zero(PossibilitySpace space);
  /// e_w: 1 on world w, 0 elsewhere.
  static Gamble unit(PossibilitySpace space, World w);
  static Gamble indicator(PossibilitySpace space, std::span<const World> worlds);
  /// Lifts a per-block value vector to a measurable gamble.
  static Gamble lift(const Partition& x, const Vec& block_values);

  PossibilitySpace space() const { return PossibilitySpace(values_.size()); }
  std::size_t size() const { return values_.size(); }
  const Vec& values() const { return values_; }
  const Rational& operator[](World w) const { return values_[w]; }

  bool is_zero() const { return ga::is_zero(values_); }
  /// Every value >= 0 and at least one > 0 (membership in L⁺).
  bool is_positive() const;

  Gamble operator-() const;
  Gamble operator+(const Gamble& other) const;
  Gamble operator-(const Gamble& other) const;
  Gamble scaled(const Rational& factor) const;

  bool operator==(const Gamble&) const = default;

 private:
  Vec values_;
};

/// Constant on every block of x.
bool is_measurable(const Gamble& f, const Partition& x);

/// Basis of L_x: the 0/1 indicators of x's blocks.
struct MeasurableSubspace {
  explicit MeasurableSubspace(Partition x);

  Partition partition;
  std::vector<Gamble> basis;
};

}  // namespace ga
