#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ga/algebra.hpp"
#include "ga/labeled.hpp"

namespace ga {

/// Bit i set means variable i is in the subset.
using VarMask = std::uint32_t;

/// A product of finite variable domains. World index is row-major mixed
/// radix: the last variable varies fastest.
class VariableSystem {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  /// Every domain must be nonempty.
  explicit VariableSystem(std::vector<std::size_t> domains);

  const std::vector<std::size_t>& domains() const { return domains_; }
  std::size_t variable_count() const { return domains_.size(); }
  const PossibilitySpace& space() const { return space_; }
  VarMask full_mask() const { return static_cast<VarMask>((std::uint64_t{1} << domains_.size()) - 1); }

  std::vector<std::size_t> values_of(World w) const;
  World world_of(std::span<const std::size_t> values) const;

  /// Throws PreconditionError on an out-of-range variable index.
  VarMask mask_of(std::span<const std::size_t> variables) const;
  const Partition& cylinder(VarMask s) const;
  const Partition& cylinder(std::span<const std::size_t> variables) const { return cylinder(mask_of(variables)); }
  /// All 2^n cylinder partitions, indexed by mask.
  const std::vector<Partition>& cylinders() const { return cylinders_; }

 private:
  std::vector<std::size_t> domains_;
  PossibilitySpace space_;
  std::vector<Partition> cylinders_;
};

/// S ⊥ T | R by (S ∪ R) ∩ (T ∪ R) = R over the variables with at least two
/// values, cross-checked against the partition-level predicate;
/// ConsistencyError if they disagree.
bool subset_ci(const VariableSystem& sys, VarMask s, VarMask t, VarMask r);

/// ε_{x∧y}(p), after confirming it equals ε_x(ε_y(p)) and ε_y(ε_x(p)).
/// PreconditionError unless x and y commute; ConsistencyError if the three
/// disagree.
PhiElement commuting_extract_compose(const Partition& x, const Partition& y, const PhiElement& p);

/// For every ordered pair of cylinders and every corpus element: the
/// composition law, cylinder meet, subset independence against the partition
/// predicate, and t_x((D₁,x)·(D₂,y)) = (D₁,x) · t_{x∧y}(D₂,y).
Report commutative_suite(const VariableSystem& sys, std::span<const PhiElement> corpus);

}  // namespace ga
