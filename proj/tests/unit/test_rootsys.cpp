#include <random>

#include <gtest/gtest.h>

#include "invforms/errors.hpp"
#include "invforms/rootsys.hpp"

using namespace invforms;

namespace {

std::vector<SimpleType> all_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.emplace_back(Family::A, l);
  for (int l = 2; l <= max_rank; ++l) out.emplace_back(Family::B, l);
  for (int l = 2; l <= max_rank; ++l) out.emplace_back(Family::C, l);
  for (int l = 4; l <= max_rank; ++l) out.emplace_back(Family::D, l);
  out.emplace_back(Family::G2, 2);
  out.emplace_back(Family::F4, 4);
  out.emplace_back(Family::E6, 6);
  out.emplace_back(Family::E7, 7);
  out.emplace_back(Family::E8, 8);
  return out;
}

Weight random_weight(std::mt19937& rng, int rank, int max_coeff) {
  std::uniform_int_distribution<int> d(0, max_coeff);
  std::vector<int> c(rank);
  for (int& x : c) x = d(rng);
  return Weight(c);
}

}  // namespace

TEST(SimpleType, RankBounds) {
  EXPECT_NO_THROW(SimpleType(Family::A, 1));
  EXPECT_THROW(SimpleType(Family::B, 1), InputError);
  EXPECT_THROW(SimpleType(Family::C, 1), InputError);
  EXPECT_THROW(SimpleType(Family::D, 3), InputError);
  EXPECT_THROW(SimpleType(Family::E7, 6), InputError);
  EXPECT_EQ(parse_family("E8"), Family::E8);
  EXPECT_THROW(parse_family("H3"), InputError);
}

TEST(RootDatum, PositiveRootCounts) {
  EXPECT_EQ(RootDatum::get(SimpleType(Family::C, 5))->positive_roots().size(), 25u);
  EXPECT_EQ(RootDatum::get(SimpleType(Family::E8, 8))->positive_roots().size(), 120u);
  EXPECT_EQ(RootDatum::get(SimpleType(Family::E6, 6))->positive_roots().size(), 36u);
  EXPECT_EQ(RootDatum::get(SimpleType(Family::G2, 2))->positive_roots().size(), 6u);
  for (const auto& t : all_types_up_to(8)) {
    EXPECT_EQ(RootDatum::get(t)->positive_roots().size(), expected_positive_root_count(t)) << t.name();
  }
}

TEST(RootDatum, SimpleCorootsAreDual) {
  for (const auto& t : all_types_up_to(8)) {
    const auto d = RootDatum::get(t);
    for (std::size_t a = 0; a < d->positive_roots().size(); ++a) {
      const auto& root = d->positive_roots()[a];
      int height = 0;
      for (int x : root) height += x;
      if (height != 1) continue;
      for (int i = 0; i < t.rank(); ++i) {
        EXPECT_EQ(d->coroot_pairing()[a][i], root[i]) << t.name();
      }
    }
  }
}

TEST(RootDatum, W0IsAnInvolution) {
  for (const auto& t : all_types_up_to(8)) {
    const auto& w = RootDatum::get(t)->w0_permutation();
    for (int i = 0; i < t.rank(); ++i) EXPECT_EQ(w[w[i]], i) << t.name();
  }
}

TEST(MinusW0, Examples) {
  EXPECT_EQ(minus_w0(*RootDatum::get(SimpleType(Family::A, 3)), Weight{1, 0, 0}), (Weight{0, 0, 1}));
  EXPECT_EQ(minus_w0(*RootDatum::get(SimpleType(Family::C, 4)), Weight{0, 1, 0, 1}), (Weight{0, 1, 0, 1}));
  EXPECT_EQ(minus_w0(*RootDatum::get(SimpleType(Family::E6, 6)), Weight{1, 0, 0, 0, 0, 0}),
            (Weight{0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(minus_w0(*RootDatum::get(SimpleType(Family::A, 3)), Weight{1, 0}), InputError);
}

TEST(MinusW0, Involutive) {
  std::mt19937 rng(7);
  for (const auto& t : all_types_up_to(8)) {
    const auto d = RootDatum::get(t);
    for (int k = 0; k < 20; ++k) {
      const Weight w = random_weight(rng, t.rank(), 3);
      EXPECT_EQ(minus_w0(*d, minus_w0(*d, w)), w);
    }
  }
}

TEST(SelfDual, Examples) {
  EXPECT_TRUE(is_self_dual(*RootDatum::get(SimpleType(Family::A, 4)), Weight{1, 0, 0, 1}));
  EXPECT_FALSE(is_self_dual(*RootDatum::get(SimpleType(Family::D, 5)), Weight{0, 0, 0, 1, 0}));
  for (const auto& t : all_types_up_to(8)) {
    EXPECT_TRUE(is_self_dual(*RootDatum::get(t), Weight::zero(t.rank())));
  }
}

TEST(DLambda, Examples) {
  EXPECT_EQ(d_lambda(*RootDatum::get(SimpleType(Family::A, 1)), Weight{1}), 1);
  EXPECT_EQ(d_lambda(*RootDatum::get(SimpleType(Family::E8, 8)), Weight::zero(8)), 0);
  // C2, omega_1: coroots of e1-e2, 2e2, e1+e2, 2e1 pair to 1, 0, 1, 1.
  EXPECT_EQ(d_lambda(*RootDatum::get(SimpleType(Family::C, 2)), Weight{1, 0}), 3);
}

TEST(DLambda, Additive) {
  std::mt19937 rng(11);
  for (const auto& t : all_types_up_to(8)) {
    const auto d = RootDatum::get(t);
    for (int k = 0; k < 10; ++k) {
      const Weight a = random_weight(rng, t.rank(), 3), b = random_weight(rng, t.rank(), 3);
      EXPECT_EQ(d_lambda(*d, a + b), d_lambda(*d, a) + d_lambda(*d, b));
    }
  }
}

TEST(DParity, ClosedFormExamples) {
  EXPECT_EQ(d_parity_closed_form(SimpleType(Family::C, 5), Weight{1, 0, 1, 0, 1}), DParity::Odd);
  EXPECT_EQ(d_parity_closed_form(SimpleType(Family::C, 5), Weight{1, 0, 1, 0, 0}), DParity::Even);
  EXPECT_EQ(d_parity_closed_form(SimpleType(Family::E8, 8), Weight{1, 1, 1, 1, 1, 1, 1, 1}), DParity::Even);
  EXPECT_EQ(d_parity_closed_form(SimpleType(Family::B, 5), Weight{0, 0, 0, 0, 1}), DParity::Odd);
  EXPECT_EQ(d_parity_closed_form(SimpleType(Family::D, 5), Weight{0, 0, 0, 1, 0}), DParity::NotSelfDual);
}

TEST(DParity, MatchesDirectSumOnRandomWeights) {
  std::mt19937 rng(2024);
  for (const auto& t : all_types_up_to(8)) {
    const auto d = RootDatum::get(t);
    for (int k = 0; k < 200; ++k) {
      const Weight w = random_weight(rng, t.rank(), 3);
      const DParity p = d_parity_closed_form(t, w);
      if (!is_self_dual(*d, w)) {
        EXPECT_EQ(p, DParity::NotSelfDual);
        continue;
      }
      EXPECT_EQ(p == DParity::Odd, d_lambda(*d, w) % 2 == 1) << t.name() << ' ' << w.to_string();
    }
  }
}

TEST(SelfDualGenerators, Examples) {
  const std::vector<Weight> e6{Weight{1, 0, 0, 0, 0, 1}, Weight{0, 1, 0, 0, 0, 0}, Weight{0, 0, 1, 0, 1, 0},
                               Weight{0, 0, 0, 1, 0, 0}};
  EXPECT_EQ(self_dual_generators(SimpleType(Family::E6, 6)), e6);
  const std::vector<Weight> a4{Weight{1, 0, 0, 1}, Weight{0, 1, 1, 0}};
  EXPECT_EQ(self_dual_generators(SimpleType(Family::A, 4)), a4);
  const auto c4 = self_dual_generators(SimpleType(Family::C, 4));
  ASSERT_EQ(c4.size(), 4u);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(c4[i - 1], Weight::fundamental(4, i));
}

TEST(SelfDualGenerators, SelfDualAndIndependent) {
  for (const auto& t : all_types_up_to(8)) {
    const auto d = RootDatum::get(t);
    const auto gens = self_dual_generators(t);
    std::vector<int> seen(t.rank(), 0);
    for (const auto& g : gens) {
      EXPECT_TRUE(is_self_dual(*d, g));
      // Supports are disjoint, so the generators are independent.
      for (int i = 1; i <= t.rank(); ++i) {
        if (g[i] != 0) EXPECT_EQ(seen[i - 1]++, 0) << t.name();
      }
    }
  }
}

TEST(DualityTable, HasOneRowPerFamily) {
  const auto rows = duality_table();
  EXPECT_EQ(rows.size(), 9u);
  EXPECT_EQ(to_string(DParity::NotSelfDual), "not-self-dual");
}
