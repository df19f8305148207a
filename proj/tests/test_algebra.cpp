#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "ga/algebra.hpp"
#include "ga/random.hpp"
#include "mutants.hpp"

namespace ga {
namespace {

Gamble G(std::initializer_list<long> v) {
  Vec q;
  for (long x : v) q.emplace_back(x);
  return Gamble(std::move(q));
}

PhiElement C(std::size_t n, std::vector<Gamble> k) { return closure(PossibilitySpace(n), k); }

Partition P(std::size_t n, std::vector<std::vector<World>> blocks) {
  return Partition::from_blocks(PossibilitySpace(n), std::move(blocks));
}

const PossibilitySpace two(2), four(4);

QuestionSet cylinders_2x2() {
  return QuestionSet(four, {Partition::bottom(four), P(4, {{0, 1}, {2, 3}}), P(4, {{0, 2}, {1, 3}}), Partition::top(four)});
}

std::vector<PhiElement> corpus_for(const QuestionSet& q, std::size_t count, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<PhiElement> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.coherent(q[s.index(q.size())], 1 + s.index(3)));
  return out;
}

void expect_clean(const Report& r) {
  for (std::size_t i = 0; i < r.failures().size() && i < 10; ++i) {
    ADD_FAILURE() << r.failures()[i].law << " " << r.failures()[i].witness.dump();
  }
  EXPECT_TRUE(r.all_pass());
}

TEST(Algebra, CombineExamples) {
  const auto p = C(2, {G({1, -1})});
  EXPECT_TRUE(phi_equal(combine(p, PhiElement::unit(two)), p));
  EXPECT_TRUE(combine(p, PhiElement::top(two)).is_top());
  EXPECT_TRUE(combine(PhiElement::top(two), p).is_top());
  EXPECT_TRUE(combine(p, C(2, {G({-1, 1})})).is_top());
  EXPECT_THROW(combine(p, PhiElement::unit(four)), SpaceMismatch);
}

TEST(Algebra, ExtractExamples) {
  const auto p = C(2, {G({1, -1})});
  EXPECT_TRUE(phi_equal(extract(Partition::bottom(two), p), PhiElement::unit(two)));
  EXPECT_TRUE(phi_equal(extract(Partition::top(two), p), p));
  const auto a = P(4, {{0, 1}, {2, 3}});
  const auto q = C(4, {G({1, 1, -1, -1})});
  EXPECT_TRUE(phi_equal(extract(a, q), q));
  EXPECT_TRUE(extract(a, PhiElement::top(four)).is_top());
  EXPECT_THROW(extract(a, p), SpaceMismatch);
}

TEST(Algebra, ExtractionKeepsMeasurablePart) {
  // On {{0,1},{2}} the measurable members of C({(1,-2,1)}) are generated by
  // positive gambles alone, since (a,a,b) >= λ(1,-2,1) needs a >= λ and a >= -2λ.
  const auto x = P(3, {{0, 1}, {2}});
  const auto p = C(3, {G({1, -2, 1})});
  EXPECT_TRUE(phi_equal(extract(x, p), PhiElement::unit(PossibilitySpace(3))));
  // (a,a,b) >= λ(1,2,-1) needs a >= 2λ and b >= -λ.
  const auto q = C(3, {G({1, 2, -1})});
  const auto e = extract(x, q);
  EXPECT_TRUE(phi_member(G({2, 2, -1}), e));
  EXPECT_FALSE(phi_member(G({1, 1, -1}), e));
  EXPECT_TRUE(is_support(x, e));
}

TEST(Algebra, SupportExamples) {
  const auto p = C(2, {G({1, -1})});
  EXPECT_TRUE(is_support(Partition::top(two), p));
  EXPECT_TRUE(is_support(P(4, {{0, 1}, {2, 3}}), C(4, {G({1, 1, -1, -1})})));
  EXPECT_FALSE(is_support(Partition::bottom(two), p));
  EXPECT_TRUE(is_support(Partition::bottom(two), PhiElement::unit(two)));
}

TEST(QuestionSetTest, ValidatesJoinClosure) {
  const auto a = P(4, {{0, 1}, {2, 3}});
  const auto b = P(4, {{0, 2}, {1, 3}});
  EXPECT_THROW(QuestionSet(four, {a, b}), PreconditionError);
  EXPECT_THROW(QuestionSet(four, {}), PreconditionError);
  const auto q = QuestionSet::join_closure(four, {a, b});
  EXPECT_EQ(q.size(), 3u);
  EXPECT_TRUE(q.contains_top());
  EXPECT_TRUE(q.contains(a));
  EXPECT_EQ(q[q.index_of(b)], b);
  EXPECT_THROW(q.index_of(Partition::bottom(four)), PreconditionError);
  const QuestionSet dup(four, {a, a, a});
  EXPECT_EQ(dup.size(), 1u);
  EXPECT_FALSE(dup.contains_top());
}

TEST(Report, JsonLines) {
  Report r;
  r.check("law.a", true);
  r.check("law.a", false, [] { return nlohmann::json{{"D", 3}}; });
  r.check("law.b", true);
  EXPECT_EQ(r.failure_count(), 1u);
  EXPECT_EQ(r.checked("law.a"), 2u);
  EXPECT_EQ(r.checked("law.c"), 0u);
  std::istringstream lines(r.to_json_lines());
  std::vector<nlohmann::json> parsed;
  for (std::string line; std::getline(lines, line);) parsed.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(parsed.size(), 3u);
  EXPECT_EQ(parsed[0]["law"], "law.a");
  EXPECT_EQ(parsed[0]["pass"], false);
  EXPECT_EQ(parsed[0]["witness"]["D"], 3);
  EXPECT_EQ(parsed[1]["checked"], 2);
  EXPECT_EQ(parsed[1]["failed"], 1);
  EXPECT_EQ(parsed[2]["pass"], true);
}

TEST(AxiomSuite, UnitAndTopOnly) {
  const std::vector<PhiElement> corpus{PhiElement::unit(four), PhiElement::top(four)};
  const auto r = axiom_suite(cylinders_2x2(), corpus);
  expect_clean(r);
  EXPECT_GT(r.checked("semigroup.associative"), 0u);
}

TEST(AxiomSuite, TwoByTwoCylinders) {
  const auto q = cylinders_2x2();
  const auto corpus = corpus_for(q, 12, 5);
  const auto r = axiom_suite(q, corpus);
  expect_clean(r);
  for (const char* law : {"semigroup.associative", "quantifier.distribute", "extraction.independence",
                          "support.upward_closed", "extract.join_support", "independence.combine",
                          "meet.extract_commutes"}) {
    EXPECT_GT(r.checked(law), 0u) << law;
  }
}

TEST(AxiomSuite, RandomFamilyWithoutTop) {
  // Coarse questions on 5 worlds; elements outside every support are skipped.
  const PossibilitySpace five(5);
  const auto q = QuestionSet::join_closure(five, {P(5, {{0, 1}, {2, 3, 4}}), P(5, {{0, 1, 2}, {3, 4}}), Partition::bottom(five)});
  ASSERT_FALSE(q.contains_top());
  Sampler s(8);
  std::vector<PhiElement> corpus;
  for (int i = 0; i < 8; ++i) corpus.push_back(s.coherent(q[s.index(q.size())], 2));
  corpus.push_back(C(5, {G({1, -1, 0, 0, 0})}));
  const auto r = axiom_suite(q, corpus);
  expect_clean(r);
  EXPECT_EQ(r.checked("corpus.unsupported"), 1u);
}

TEST(AxiomSuite, RejectsForeignSpace) {
  const std::vector<PhiElement> corpus{PhiElement::unit(two)};
  EXPECT_THROW(axiom_suite(cylinders_2x2(), corpus), SpaceMismatch);
}

TEST(AlgebraProperty, LawsOnRandomElements) {
  Sampler s(41);
  for (int i = 0; i < 40; ++i) {
    const PossibilitySpace space(2 + s.index(3));
    const auto x = s.partition(space);
    const auto y = s.partition(space);
    const auto a = s.coherent(space, 2);
    const auto b = s.coherent(space, 2);
    // Monotone in the element.
    const auto ab = combine(a, b);
    if (!ab.is_top()) EXPECT_TRUE(phi_leq(extract(x, a), extract(x, ab)));
    // Never Top for coherent input.
    EXPECT_FALSE(extract(x, a).is_top());
    EXPECT_TRUE(phi_leq(extract(x, a), a));
    // Coarser then finer, either order, is the coarser one.
    const auto m = meet(x, y);
    EXPECT_TRUE(phi_equal(extract(m, extract(x, a)), extract(m, a)));
    EXPECT_TRUE(phi_equal(extract(x, extract(m, a)), extract(m, a)));
    // Join of supports.
    const auto ax = s.coherent(x, 2);
    const auto by = s.coherent(y, 2);
    const auto c = combine(ax, by);
    EXPECT_TRUE(is_support(join(x, y), c));
    // Combination is the least upper bound.
    if (!c.is_top()) {
      EXPECT_TRUE(phi_leq(ax, c));
      EXPECT_TRUE(phi_leq(by, c));
    }
  }
}

TEST(Mutation, CombineWithoutClosureIsCaught) {
  const auto q = cylinders_2x2();
  const auto corpus = corpus_for(q, 12, 5);
  const auto r = axiom_suite(q, corpus, mutant::combine_without_closure());
  EXPECT_FALSE(r.all_pass());
  std::set<std::string> laws;
  for (const auto& f : r.failures()) laws.insert(f.law);
  EXPECT_TRUE(laws.contains("semigroup.closed"));
  EXPECT_TRUE(laws.contains("quantifier.distribute"));
}

TEST(Mutation, ExtensionWithoutUnitsIsCaught) {
  const auto q = cylinders_2x2();
  const auto corpus = corpus_for(q, 12, 5);
  const auto r = axiom_suite(q, corpus, mutant::natural_extension_without_units());
  EXPECT_FALSE(r.all_pass());
  std::set<std::string> laws;
  for (const auto& f : r.failures()) laws.insert(f.law);
  EXPECT_TRUE(laws.contains("quantifier.closed"));
}

TEST(Separoid, AllPartitionsOfFourWorlds) {
  const auto all = all_partitions(four);
  const auto r = q_separoid_suite(all);
  expect_clean(r);
  EXPECT_EQ(r.checked("separoid.self"), all.size() * all.size());
  EXPECT_GT(r.checked("separoid.decomposition"), 0u);
}

}  // namespace
}  // namespace ga
