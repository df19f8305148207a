#include "ga/desirability.hpp"

#include <algorithm>

namespace ga {

namespace {

std::vector<Gamble> units(PossibilitySpace space) { return ConeV::orthant(space).generators(); }

// Removes nonnegative generators (already covered by L⁺) and generators that
// are redundant given the rest plus L⁺, then appends the unit indicators.
ConeV canonical_coherent_cone(PossibilitySpace space, std::vector<Gamble> extra) {
  std::vector<Gamble> kept;
  for (auto& g : extra) {
    if (!g.is_positive()) kept.push_back(std::move(g));
  }
  kept = ConeV(space, std::move(kept)).generators();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Gamble> rest;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.push_back(kept[j]);
    }
    auto with_units = rest;
    for (World w = 0; w < space.size(); ++w) with_units.push_back(Gamble::unit(space, w));
    if (cone_member(kept[i], with_units)) kept = std::move(rest);
  }
  for (auto& u : units(space)) kept.push_back(std::move(u));
  return ConeV(space, std::move(kept));
}

}  // namespace

bool is_unit_indicator(const Gamble& g) {
  std::size_t ones = 0;
  for (const auto& q : g.values()) {
    if (q == 1) {
      ++ones;
    } else if (sgn(q) != 0) {
      return false;
    }
  }
  return ones == 1;
}

PhiElement PhiElement::top(PossibilitySpace space) { return PhiElement(space, std::nullopt); }

PhiElement PhiElement::unit(PossibilitySpace space) { return PhiElement(space, ConeV::orthant(space)); }

PhiElement PhiElement::coherent(ConeV cone) {
  for (World w = 0; w < cone.space().size(); ++w) {
    if (!cone_member(Gamble::unit(cone.space(), w), cone)) {
      throw PreconditionError("coherent element must contain every unit indicator");
    }
  }
  if (zero_nontrivial(cone)) throw PreconditionError("cone is not coherent: zero is a positive combination");
  const auto space = cone.space();
  return PhiElement(space, std::move(cone));
}

PhiElement PhiElement::unchecked(ConeV cone) {
  const auto space = cone.space();
  return PhiElement(space, std::move(cone));
}

const ConeV& PhiElement::cone() const {
  if (!cone_) throw PreconditionError("Top has no cone");
  return *cone_;
}

std::vector<Gamble> PhiElement::extra_generators() const {
  std::vector<Gamble> out;
  for (const auto& g : cone().generators()) {
    if (!is_unit_indicator(g)) out.push_back(g);
  }
  return out;
}

PhiElement natural_extension(PossibilitySpace space, std::span<const Gamble> k) {
  std::vector<Gamble> gens;
  for (const auto& g : k) {
    require_same_space(g.space(), space, "natural_extension");
    if (g.is_zero()) throw PreconditionError("natural_extension: zero gamble in input");
    gens.push_back(g);
  }
  auto all = gens;
  for (auto& u : units(space)) all.push_back(std::move(u));
  if (zero_nontrivial(ConeV(space, std::move(all)))) return PhiElement::top(space);
  return PhiElement::unchecked(canonical_coherent_cone(space, std::move(gens)));
}

PhiElement closure(PossibilitySpace space, std::span<const Gamble> k) {
  std::vector<Gamble> nonzero;
  for (const auto& g : k) {
    require_same_space(g.space(), space, "closure");
    if (g.is_zero()) return PhiElement::top(space);
    nonzero.push_back(g);
  }
  return natural_extension(space, nonzero);
}

bool phi_member(const Gamble& f, const PhiElement& p) {
  require_same_space(f.space(), p.space(), "phi_member");
  if (p.is_top()) return true;
  if (f.is_zero()) return false;
  return f.is_positive() || cone_member(f, p.cone());
}

bool phi_leq(const PhiElement& a, const PhiElement& b) {
  require_same_space(a.space(), b.space(), "phi_leq");
  if (b.is_top()) return true;
  if (a.is_top()) return false;
  const auto& gens = a.cone().generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Gamble& g) { return is_unit_indicator(g) || phi_member(g, b); });
}

bool phi_equal(const PhiElement& a, const PhiElement& b) { return phi_leq(a, b) && phi_leq(b, a); }

PhiElement phi_meet(std::span<const PhiElement> ps) {
  if (ps.empty()) throw PreconditionError("phi_meet: empty family");
  const auto space = ps.front().space();
  std::optional<ConeV> acc;
  for (const auto& p : ps) {
    require_same_space(p.space(), space, "phi_meet");
    if (p.is_top()) continue;
    acc = acc ? cone_intersect(*acc, p.cone()) : p.cone();
  }
  if (!acc) return PhiElement::top(space);
  return PhiElement::unchecked(canonical_coherent_cone(space, acc->generators()));
}

}  // namespace ga
