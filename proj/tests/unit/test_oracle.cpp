#include <gtest/gtest.h>

#include "invforms/classify.hpp"
#include "invforms/errors.hpp"
#include "invforms/oracle.hpp"

using namespace invforms;

TEST(OracleGram, SmallCases) {
  EXPECT_EQ(oracle_gram_C(2, 2).verdict, Verdict::SymplecticOnly);
  EXPECT_EQ(oracle_gram_C(3, 2).verdict, Verdict::Orthogonal);
  EXPECT_EQ(oracle_gram_C(4, 2).verdict, Verdict::Orthogonal);
  EXPECT_EQ(oracle_gram_C(4, 4).verdict, Verdict::Orthogonal);
  EXPECT_THROW(oracle_gram_C(3, 3), InputError);
  const auto r = oracle_gram_C(2, 2);
  EXPECT_EQ(r.dim_weyl, 5u);
  EXPECT_EQ(r.dim_radical, 1u);
  EXPECT_EQ(r.dim_irreducible, 4u);
}

TEST(OracleSolver, SmallCases) {
  EXPECT_EQ(oracle_solver(FactorFamily::CFundamental, 2, 1).verdict, Verdict::SymplecticOnly);
  EXPECT_EQ(oracle_solver(FactorFamily::CFundamental, 3, 3).verdict, Verdict::Orthogonal);
  EXPECT_EQ(oracle_solver(FactorFamily::APair, 4, 1).verdict, Verdict::Orthogonal);
  EXPECT_EQ(oracle_solver(FactorFamily::APair, 5, 2).verdict, Verdict::SymplecticOnly);
  EXPECT_THROW(oracle_solver(FactorFamily::APair, 4, 2), InputError);
}

TEST(Oracles, AgreeWithClassifierTypeC) {
  for (int l = 2; l <= 5; ++l) {
    for (int r = 1; r <= l; ++r) {
      const auto expected = classify(SimpleType(Family::C, l), Weight::fundamental(l, r), 2).verdict;
      const auto solver = oracle_solver(FactorFamily::CFundamental, l, r);
      EXPECT_EQ(solver.verdict, expected) << l << ' ' << r;
      EXPECT_EQ(Integer(solver.dim_irreducible), irr_dim_C(l, r, 2));
      if (r % 2 == 0) EXPECT_EQ(oracle_gram_C(l, r).verdict, expected) << l << ' ' << r;
    }
  }
}

TEST(Oracles, AgreeWithClassifierTypeA) {
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> c(n - 1, 0);
    c.front() += 1;
    c.back() += 1;
    const Weight w(c);
    const auto expected = classify(SimpleType(Family::A, n - 1), w, 2).verdict;
    EXPECT_EQ(oracle_solver(FactorFamily::APair, n, 1).verdict, expected) << n;
    EXPECT_EQ(oracle_gram(*generate_weyl_lattice_A(n, 1)).verdict, expected) << n;
  }
}
