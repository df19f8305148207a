#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ga/desirability.hpp"
#include "ga/partition.hpp"

namespace ga {

/// D₁ · D₂ = C(D₁ ∪ D₂). Top absorbs.
PhiElement combine(const PhiElement& a, const PhiElement& b);
/// ε_x(D) = C(D ∩ L_x). Never Top for coherent D.
PhiElement extract(const Partition& x, const PhiElement& p);
bool is_support(const Partition& x, const PhiElement& p);

/// A finite family of questions closed under join.
class QuestionSet {
 public:
  /// Deduplicates, sorts, and throws PreconditionError if not join-closed.
  QuestionSet(PossibilitySpace space, std::vector<Partition> partitions);
  /// Smallest join-closed family containing the given partitions.
  static QuestionSet join_closure(PossibilitySpace space, std::vector<Partition> generators);

  const PossibilitySpace& space() const { return space_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }
  const Partition& operator[](std::size_t i) const { return partitions_[i]; }
  bool contains(const Partition& p) const;
  std::size_t index_of(const Partition& p) const;
  bool contains_top() const { return contains_top_; }

 private:
  PossibilitySpace space_;
  std::vector<Partition> partitions_;
  bool contains_top_ = false;
};

/// A failed instance of a law. `witness` identifies the instance (indices
/// into the corpus and question set) and carries the serialized values.
struct LawRecord {
  std::string law;
  nlohmann::json witness;
  bool pass = true;
};

/// Outcome of a law suite: every failing instance in full, plus per-law
/// counts of checked instances.
class Report {
 public:
  struct Tally {
    std::string law;
    std::size_t checked = 0;
    std::size_t failed = 0;
  };

  /// `witness` is only invoked when the check fails.
  template <class WitnessFn>
  void check(const std::string& law, bool pass, WitnessFn&& witness) {
    auto& t = tally(law);
    ++t.checked;
    if (!pass) {
      ++t.failed;
      failures_.push_back({law, witness(), false});
    }
  }
  void check(const std::string& law, bool pass) {
    check(law, pass, [] { return nlohmann::json::object(); });
  }
  void append(const Report& other);

  const std::vector<LawRecord>& failures() const { return failures_; }
  const std::vector<Tally>& tallies() const { return tallies_; }
  std::size_t failure_count() const { return failures_.size(); }
  std::size_t checked(const std::string& law) const;
  bool all_pass() const { return failures_.empty(); }
  /// Failing records as {"law","witness","pass":false}, then one summary
  /// line {"law","checked","failed","pass"} per law.
  std::string to_json_lines() const;

 private:
  Tally& tally(const std::string& law);

  std::vector<LawRecord> failures_;
  std::vector<Tally> tallies_;
};

/// The operations the law checks run against. Swappable so that tests can
/// confirm a corrupted operation is caught.
struct AlgebraOps {
  std::function<PhiElement(const PhiElement&, const PhiElement&)> combine;
  std::function<PhiElement(const Partition&, const PhiElement&)> extract;

  static AlgebraOps standard();
};

/// Domain-free laws over q and the corpus: semigroup with null and unit,
/// q-separoid on q, existential quantifier, extraction under conditional
/// independence, supports, elementary extraction laws, the generalized
/// independence properties, and extraction commuting with meets.
///
/// If q lacks the top partition, corpus elements with no support in q are
/// skipped (recorded under "corpus.unsupported").
Report axiom_suite(const QuestionSet& q, std::span<const PhiElement> corpus,
                   const AlgebraOps& ops = AlgebraOps::standard());

/// Closure-operator laws on each gamble set K_i, paired with K_{i+1} where
/// two sets are needed: extensivity, idempotence, monotonicity, the
/// C(C(K₁) ∪ K₂) = C(K₁ ∪ K₂) identity, and D1–D4 on the coherent closures.
Report closure_suite(std::span<const std::vector<Gamble>> sets);

/// Checks the separoid laws (self, symmetry, decomposition, join_given) and
/// x⊥y|z ⟺ (x∨z)⊥(y∨z)|z on every triple of `ps`; decomposition is
/// instantiated with every member of `ps` below y.
Report q_separoid_suite(std::span<const Partition> ps);

}  // namespace ga
