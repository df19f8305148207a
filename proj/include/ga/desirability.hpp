#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ga/cone.hpp"

namespace ga {

/// An element of Φ: a coherent set of desirable gambles, or the contradiction
/// Top = L(Ω) (the null element 0 of the algebra).
///
/// A coherent element holds a cone whose generators include every unit
/// indicator e_w, so that L⁺ ⊆ cone; the represented set is cone \ {0}.
class PhiElement {
 public:
  static PhiElement top(PossibilitySpace space);
  /// L⁺, the vacuous element 1.
  static PhiElement unit(PossibilitySpace space);
  /// Checks D1 (every e_w is a member) and D2 (no nontrivial zero combination).
  static PhiElement coherent(ConeV cone);
  /// Wraps a cone without checking coherence. Only for constructing
  /// deliberately broken values in tests.
  static PhiElement unchecked(ConeV cone);

  bool is_top() const { return !cone_; }
  const PossibilitySpace& space() const { return space_; }
  /// Precondition: !is_top().
  const ConeV& cone() const;
  /// Generators other than the unit indicators; what gets serialized.
  std::vector<Gamble> extra_generators() const;

 private:
  PhiElement(PossibilitySpace space, std::optional<ConeV> cone) : space_(space), cone_(std::move(cone)) {}

  PossibilitySpace space_;
  std::optional<ConeV> cone_;
};

/// posi(K ∪ L⁺). Top when zero is a nontrivial combination.
/// Rejects zero gambles in K.
PhiElement natural_extension(PossibilitySpace space, std::span<const Gamble> k);
/// Smallest element of Φ containing K; zero in K forces Top.
PhiElement closure(PossibilitySpace space, std::span<const Gamble> k);

bool phi_member(const Gamble& f, const PhiElement& p);
/// Set inclusion, i.e. the information order.
bool phi_leq(const PhiElement& a, const PhiElement& b);
bool phi_equal(const PhiElement& a, const PhiElement& b);
/// Set intersection; Top entries are neutral. Needs a nonempty list.
PhiElement phi_meet(std::span<const PhiElement> ps);

/// True iff g is a unit indicator e_w.
bool is_unit_indicator(const Gamble& g);

}  // namespace ga
