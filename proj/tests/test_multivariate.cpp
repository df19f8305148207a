#include <gtest/gtest.h>

#include "ga/multivariate.hpp"
#include "ga/random.hpp"

namespace ga {
namespace {

Partition P(std::size_t n, std::vector<std::vector<World>> blocks) {
  return Partition::from_blocks(PossibilitySpace(n), std::move(blocks));
}

TEST(Multivariate, WorldEncodingIsRowMajor) {
  const VariableSystem sys({2, 3});
  EXPECT_EQ(sys.space().size(), 6u);
  EXPECT_EQ(sys.values_of(0), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(sys.values_of(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(sys.values_of(3), (std::vector<std::size_t>{1, 0}));
  for (World w = 0; w < 6; ++w) EXPECT_EQ(sys.world_of(sys.values_of(w)), w);
  EXPECT_EQ(sys.full_mask(), 3u);
}

TEST(Multivariate, CylinderExamples) {
  const VariableSystem sys({2, 2});
  const std::vector<std::size_t> first{0}, second{1}, none{}, both{0, 1};
  EXPECT_EQ(sys.cylinder(first), P(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(sys.cylinder(second), P(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(sys.cylinder(none), Partition::bottom(PossibilitySpace(4)));
  EXPECT_EQ(sys.cylinder(both), Partition::top(PossibilitySpace(4)));
  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(sys.cylinder(bad), PreconditionError);
}

TEST(Multivariate, RejectsBadDomains) {
  EXPECT_THROW(VariableSystem({2, 0}), PreconditionError);
  EXPECT_THROW(VariableSystem(std::vector<std::size_t>(17, 1)), PreconditionError);
}

TEST(Multivariate, CylinderInvariants) {
  for (const auto& domains : std::vector<std::vector<std::size_t>>{{2, 3}, {3, 2, 2}, {2, 2, 2}, {1, 3}}) {
    const VariableSystem sys(domains);
    const auto& cyl = sys.cylinders();
    VarMask informative = 0;
    for (std::size_t i = 0; i < domains.size(); ++i) {
      if (domains[i] > 1) informative |= VarMask{1} << i;
    }
    ASSERT_EQ(cyl.size(), std::size_t{1} << domains.size());
    for (VarMask s = 0; s < cyl.size(); ++s) {
      std::size_t blocks = 1;
      for (std::size_t i = 0; i < domains.size(); ++i) {
        if (s & (1u << i)) blocks *= domains[i];
      }
      EXPECT_EQ(cyl[s].block_count(), blocks);
      for (VarMask t = 0; t < cyl.size(); ++t) {
        EXPECT_TRUE(commutes(cyl[s], cyl[t]));
        EXPECT_EQ(meet(cyl[s], cyl[t]), cyl[s & t]);
        EXPECT_EQ(join(cyl[s], cyl[t]), cyl[s | t]);
        EXPECT_EQ(leq(cyl[s], cyl[t]), (s & ~t & informative) == 0);
      }
    }
  }
}

TEST(Multivariate, SubsetCiExamples) {
  const VariableSystem sys({2, 2});
  EXPECT_TRUE(subset_ci(sys, 0b01, 0b10, 0));
  EXPECT_FALSE(subset_ci(sys, 0b01, 0b01, 0));
  for (VarMask t = 0; t < 4; ++t) EXPECT_TRUE(subset_ci(sys, 0b01, t, 0b01));
}

// Every triple of subsets of three variables; both routes must agree, which
// subset_ci itself enforces, and the identity is recomputed here.
TEST(Multivariate, SubsetCiAllTriples) {
  const VariableSystem sys({2, 3, 2});
  for (VarMask s = 0; s < 8; ++s) {
    for (VarMask t = 0; t < 8; ++t) {
      for (VarMask r = 0; r < 8; ++r) {
        EXPECT_EQ(subset_ci(sys, s, t, r), ((s | r) & (t | r)) == r);
      }
    }
  }
}

// A variable with one value has the bottom cylinder, so it is independent of
// itself given nothing.
TEST(Multivariate, TrivialDomainIsUninformative) {
  const VariableSystem sys({1, 2, 2});
  EXPECT_EQ(sys.cylinder(VarMask{0b001}), sys.cylinder(VarMask{0}));
  EXPECT_TRUE(subset_ci(sys, 0b001, 0b001, 0));
  EXPECT_FALSE(subset_ci(sys, 0b011, 0b010, 0));
  for (VarMask s = 0; s < 8; ++s) {
    for (VarMask t = 0; t < 8; ++t) {
      for (VarMask r = 0; r < 8; ++r) EXPECT_NO_THROW(subset_ci(sys, s, t, r));
    }
  }
}

TEST(Multivariate, CommutingExtractCompose) {
  const VariableSystem sys({2, 2});
  const auto x = sys.cylinder(VarMask{0b01});
  const auto y = sys.cylinder(VarMask{0b10});
  Sampler s(83);
  for (int i = 0; i < 10; ++i) {
    const auto p = s.coherent(sys.space(), 2);
    EXPECT_TRUE(phi_equal(commuting_extract_compose(x, y, p), extract(meet(x, y), p)));
    EXPECT_TRUE(phi_equal(commuting_extract_compose(x, x, p), extract(x, p)));
    const auto top = Partition::top(sys.space());
    EXPECT_TRUE(phi_equal(commuting_extract_compose(top, y, p), extract(y, p)));
  }
  const auto a = P(3, {{0, 1}, {2}});
  const auto b = P(3, {{0}, {1, 2}});
  EXPECT_THROW(commuting_extract_compose(a, b, PhiElement::unit(PossibilitySpace(3))), PreconditionError);
}

TEST(MultivariateSuite, SmallSystems) {
  for (const auto& domains : std::vector<std::vector<std::size_t>>{{2}, {2, 2}, {2, 3}}) {
    const VariableSystem sys(domains);
    Sampler s(89);
    std::vector<PhiElement> corpus;
    for (int i = 0; i < 6; ++i) corpus.push_back(s.coherent(sys.cylinders()[s.index(sys.cylinders().size())], 2));
    const auto r = commutative_suite(sys, corpus);
    for (const auto& f : r.failures()) ADD_FAILURE() << f.law << " " << f.witness.dump();
    EXPECT_GT(r.checked("commutative.extraction"), 0u);
    EXPECT_GT(r.checked("commutative.combination"), 0u);
  }
}

}  // namespace
}  // namespace ga
