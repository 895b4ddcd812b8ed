#include <gtest/gtest.h>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"
#include "invforms/lattice.hpp"
#include "invforms/repdata.hpp"

using namespace invforms;

namespace {

std::vector<FactorLabel> labels_C(std::initializer_list<int> js) {
  std::vector<FactorLabel> out;
  for (int j : js) out.push_back({j, 0});
  return out;
}

// dim V - dim rad on the constructed Weyl lattice.
Integer oracle_irr_dim(const LatticeModule& m) { return Integer(m.rank() - m.radical_mod2().size()); }

}  // namespace

TEST(CompFactorsC, Examples) {
  EXPECT_EQ(comp_factors_C(2, 2, 2).labels, labels_C({2, 0}));
  EXPECT_EQ(comp_factors_C(3, 2, 2).labels, labels_C({2}));
  EXPECT_EQ(comp_factors_C(3, 3, 2).labels, labels_C({3, 1}));
  EXPECT_THROW(comp_factors_C(3, 4, 2), InputError);
}

TEST(CompFactorsC, Invariants) {
  for (int l = 2; l <= 20; ++l) {
    for (int r = 1; r <= l; ++r) {
      const auto set = comp_factors_C(l, r, 2);
      EXPECT_TRUE(set.contains({r, 0}));
      for (const auto& lab : set.labels) EXPECT_EQ((r - lab.first) % 2, 0);
    }
  }
}

// Under l + 1 = 2^i + t mod 2^{i+1}: nontrivial factors of V(omega_{2^{i+1}})
// are L(omega_{2j}) with 2j >= t + 1, and for t = 0 the only other factor is
// the trivial one.
TEST(CompFactorsC, FactorShapeForGammaWeights) {
  for (int l = 2; l <= 40; ++l) {
    for (int i = 0; (2 << i) <= l; ++i) {
      const auto t = gamma_shift(l + 1, i);
      if (!t) continue;
      const int r = 2 << i;
      const auto set = comp_factors_C(l, r, 2);
      EXPECT_TRUE(set.contains({0, 0})) << l << ' ' << i;
      for (const auto& lab : set.labels) {
        if (lab.first == 0) continue;
        EXPECT_EQ(lab.first % 2, 0);
        EXPECT_GE(lab.first, *t + 1);
      }
      if (*t == 0) EXPECT_EQ(set.labels, labels_C({r, 0})) << l;
    }
  }
}

TEST(CompFactorsA, FrozenFromLatticeOracle) {
  // n = 5 and n = 3: the lattice oracle finds V irreducible (24 and 8).
  EXPECT_EQ(oracle_irr_dim(*generate_weyl_lattice_A(5, 1)), Integer(24));
  EXPECT_EQ(oracle_irr_dim(*generate_weyl_lattice_A(3, 1)), Integer(8));
  EXPECT_EQ(comp_factors_A(5, 1, 4, 2).labels, (std::vector<FactorLabel>{{1, 4}}));
  EXPECT_EQ(comp_factors_A(3, 1, 2, 2).labels, (std::vector<FactorLabel>{{1, 2}}));
  // n = 6: one trivial factor, as for the gamma weights of type C.
  EXPECT_EQ(oracle_irr_dim(*generate_weyl_lattice_A(6, 1)), Integer(34));
  EXPECT_TRUE(comp_factors_A(6, 1, 5, 2).contains({0, 6}));
  EXPECT_EQ(comp_factors_A(6, 1, 5, 2).labels.size(), 2u);
}

TEST(BranchC, Examples) {
  const auto a = branch_C(3, 2, 2);
  EXPECT_EQ(a.entries, (std::vector<BranchEntry>{{{2, 0}, 1}, {{1, 0}, 2}, {{0, 0}, 2}}));
  EXPECT_EQ(a.d_val, 1);
  EXPECT_EQ(a.epsilon, 0);
  const auto b = branch_C(4, 1, 2);
  EXPECT_EQ(b.entries, (std::vector<BranchEntry>{{{1, 0}, 1}, {{0, 0}, 2}}));
  EXPECT_EQ(b.d_val, 2);
  // d = nu_2(1) = 0; label 3 exceeds the rank of C_2 and drops.
  const auto c = branch_C(3, 3, 2);
  EXPECT_EQ(c.entries, (std::vector<BranchEntry>{{{2, 0}, 2}}));
  EXPECT_THROW(branch_C(2, 1, 2), InputError);
}

TEST(BranchA, Examples) {
  const auto a = branch_A(4, 1, 1, 2);
  EXPECT_EQ(a.d_val, 0);
  EXPECT_EQ(a.epsilon, 0);
  std::multiset<std::pair<int, int>> got;
  for (const auto& e : a.entries) {
    for (int k = 0; k < e.multiplicity; ++k) got.insert({e.label.first, e.label.second});
  }
  EXPECT_EQ(got, (std::multiset<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}));

  const auto b = branch_A(5, 1, 1, 2);
  EXPECT_EQ(b.d_val, 2);
  bool has_trivial_twice = false;
  for (const auto& e : b.entries) {
    EXPECT_TRUE(e.multiplicity == 1 || e.multiplicity == 2);
    if (e.label == FactorLabel{0, 0}) has_trivial_twice = e.multiplicity == 2;
  }
  EXPECT_TRUE(has_trivial_twice);
}

TEST(WeylDim, Examples) {
  EXPECT_EQ(weyl_dim(SimpleType(Family::C, 3), Weight{0, 0, 1}), Integer(14));
  EXPECT_EQ(weyl_dim(SimpleType(Family::C, 2), Weight{0, 1}), Integer(5));
  EXPECT_EQ(weyl_dim(SimpleType(Family::A, 3), Weight{1, 0, 1}), Integer(15));
  EXPECT_EQ(weyl_dim(SimpleType(Family::E8, 8), Weight::fundamental(8, 8)), Integer(248));
  EXPECT_EQ(weyl_dim(SimpleType(Family::G2, 2), Weight{1, 0}), Integer(7));
  for (int l = 2; l <= 10; ++l) {
    for (int k = 1; k <= l; ++k) {
      EXPECT_EQ(weyl_dim(SimpleType(Family::C, l), Weight::fundamental(l, k)),
                binomial(2 * l, k) - binomial(2 * l, k - 2));
    }
  }
}

TEST(IrrDim, Examples) {
  EXPECT_EQ(irr_dim_C(2, 2, 2), Integer(4));
  EXPECT_EQ(irr_dim_C(3, 3, 2), Integer(8));
  EXPECT_EQ(irr_dim_C(3, 2, 2), Integer(14));
  EXPECT_EQ(irr_dim_C(5, 0, 2), Integer(1));
  EXPECT_EQ(irr_dim(FactorFamily::APair, 4, {1, 3}, 2), Integer(14));
}

TEST(IrrDim, BranchIdentityTypeC) {
  for (int l = 3; l <= 12; ++l) {
    for (int r = 1; r <= l; ++r) {
      Integer sum = 0;
      for (const auto& e : branch_C(l, r, 2).entries) sum += e.multiplicity * irr_dim_C(l - 1, e.label.first, 2);
      EXPECT_EQ(sum, irr_dim_C(l, r, 2)) << l << ' ' << r;
    }
  }
}

TEST(IrrDim, BranchIdentityTypeA) {
  for (int n = 4; n <= 12; ++n) {
    for (int s = 0; s <= n; ++s) {
      for (int r = 0; r <= n - s; ++r) {
        Integer sum = 0;
        for (const auto& e : branch_A(n, r, s, 2).entries) {
          sum += e.multiplicity * pi_dim(n - 1, e.label.first, e.label.second, 2);
        }
        EXPECT_EQ(sum, pi_dim(n, r, s, 2)) << n << ' ' << r << ' ' << s;
      }
    }
  }
}

// Restricting L(omega_j) t times from C_l, with t + 1 <= j <= 2^{i+1}, never
// reaches the trivial module.
TEST(BranchC, NoTrivialFactorAfterRepeatedRestriction) {
  for (int l = 3; l <= 12; ++l) {
    for (int i = 0; (2 << i) <= l; ++i) {
      const auto t = gamma_shift(l + 1, i);
      if (!t || *t == 0) continue;
      for (int j = *t + 1; j <= (2 << i); ++j) {
        std::map<int, int> current{{j, 1}};
        for (int step = 0; step < *t; ++step) {
          std::map<int, int> next;
          const int rank = l - step;
          for (const auto& [lab, mult] : current) {
            if (rank < 3) {
              next[lab] += mult;
              continue;
            }
            for (const auto& e : branch_C(rank, lab, 2).entries) next[e.label.first] += mult * e.multiplicity;
          }
          current = std::move(next);
        }
        EXPECT_EQ(current.count(0), 0u) << l << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(IrrDim, AgreesWithLatticeOracleSmallCases) {
  for (int l = 2; l <= 5; ++l) {
    for (int r = 1; r <= l; ++r) {
      EXPECT_EQ(oracle_irr_dim(*generate_weyl_lattice_C(l, r)), irr_dim_C(l, r, 2)) << l << ' ' << r;
    }
  }
}

TEST(DominantMultiplicities, AdjointOfA2) {
  const auto m = dominant_multiplicities(SimpleType(Family::A, 2), Weight{1, 1});
  EXPECT_EQ(m.at(Weight{1, 1}), 1);
  EXPECT_EQ(m.at(Weight{0, 0}), 2);
}
