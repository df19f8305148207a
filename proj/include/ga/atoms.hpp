#pragma once

#include <vector>

#include "ga/algebra.hpp"
#include "ga/desirability.hpp"

namespace ga {

/// A maximal coherent set given by a lexicographic chain of probability mass
/// functions whose expectation functionals have full rank. A gamble f is a
/// member iff f != 0 and (E_p1 f, ..., E_pk f) is lexicographically positive.
class MaximalSet {
 public:
  /// Throws PreconditionError on an invalid pmf or a rank-deficient chain
  /// (then the kernel holds some g with both g and -g outside the set).
  explicit MaximalSet(std::vector<Vec> chain);

  PossibilitySpace space() const { return PossibilitySpace(chain_.front().size()); }
  const std::vector<Vec>& chain() const { return chain_; }

 private:
  std::vector<Vec> chain_;
};

/// Sign of the first nonzero entry of the expectation vector; 0 for f = 0.
int lex_sign(const Gamble& f, const std::vector<Vec>& chain);
bool lex_member(const Gamble& f, const MaximalSet& m);
/// Every generator of coherent p is a member of m, i.e. p ⊆ m.
bool dominates(const MaximalSet& m, const PhiElement& p);
/// C(gen(p) ∪ {-f}) for f ∉ p: a coherent superset of p that excludes f.
PhiElement separating_superset(const PhiElement& p, const Gamble& f);
/// A lexicographic maximal set containing p and not f, for f ∉ p.
MaximalSet extend_to_maximal(const PhiElement& p, const Gamble& f);

/// Block-wise minimum of g: the largest x-measurable gamble below g.
Gamble blockwise_min(const Gamble& g, const Partition& x);
/// g ∈ ε_x(M) = C(M ∩ L_x). Either g ∈ L⁺, or the block-wise minimum of g is
/// nonzero and lexicographically positive under the chain's block marginals.
bool local_atom_member(const Gamble& g, const Partition& x, const MaximalSet& m);

/// Atom laws over maximal sets, coherent elements and gambles:
/// trichotomy and D1–D4 for each maximal set, the dichotomy "p ⊆ m or p·m
/// is contradictory" witnessed by a generator g with -g ∈ m, separation
/// witnesses for every gamble outside each element, and the local-atom
/// dichotomy for x-supported elements.
Report atoms_suite(std::span<const MaximalSet> ms, std::span<const PhiElement> corpus,
                   std::span<const Gamble> gambles, std::span<const Partition> questions);

}  // namespace ga
