#pragma once

#include <span>
#include <vector>

#include "ga/gamble.hpp"
#include "ga/rational.hpp"

namespace ga {

/// Generator form: the set of nonnegative combinations of `generators`.
/// Generators are stored as primitive integer directions, nonzero, without
/// duplicates, in first-seen order. An empty list is the cone {0}.
class ConeV {
 public:
  ConeV(PossibilitySpace space, std::vector<Gamble> generators);
  static ConeV zero(PossibilitySpace space) { return ConeV(space, {}); }
  static ConeV orthant(PossibilitySpace space);

  const PossibilitySpace& space() const { return space_; }
  const std::vector<Gamble>& generators() const { return generators_; }

 private:
  PossibilitySpace space_;
  std::vector<Gamble> generators_;
};

/// Facet form: {f : a.f >= 0 for a in inequalities, b.f = 0 for b in equalities}.
struct ConeH {
  PossibilitySpace space;
  std::vector<Vec> inequalities;
  std::vector<Vec> equalities;

  bool contains(const Gamble& f) const;
};

namespace dd {

struct Generators {
  std::vector<Vec> rays;
  std::vector<Vec> lines;
};

/// Double description: minimal generators of {x in R^dim : A x >= 0, E x = 0}.
/// Constraints are inserted in the given order, equalities first. Rays are
/// returned as sorted primitive vectors, lines as sorted primitive vectors
/// with positive leading entry.
Generators enumerate(std::size_t dim, std::span<const Vec> inequalities, std::span<const Vec> equalities);

}  // namespace dd

ConeH dd_convert(const ConeV& c);
ConeV dd_convert_back(const ConeH& h);

/// f in cone(generators), decided by exact phase-one simplex.
bool cone_member(const Gamble& f, const ConeV& c);
bool cone_member(const Gamble& f, std::span<const Gamble> generators);
/// Some nonnegative combination of the generators with weights summing to one
/// equals zero.
bool zero_nontrivial(const ConeV& c);
/// Intersection via H-forms: concatenate constraints and convert back.
ConeV cone_intersect(const ConeV& a, const ConeV& b);
enum class Pruning { minimal, none };

/// c ∩ L_x. Uses orthant_trace when c holds every unit gamble and no line,
/// otherwise projects the generator/multiplier cone onto block coordinates;
/// see cone.cpp. With Pruning::none the result may carry redundant generators.
ConeV intersect_subspace(const ConeV& c, const MeasurableSubspace& m, Pruning pruning = Pruning::minimal);
/// c ∩ L_x for a pointed cone that holds every unit gamble, grown one extreme
/// ray at a time by linear programming. The result may carry redundant
/// generators.
ConeV orthant_trace(const ConeV& c, const MeasurableSubspace& m);
/// Drops generators that are nonnegative combinations of the others.
ConeV prune_redundant(const ConeV& c);

}  // namespace ga
