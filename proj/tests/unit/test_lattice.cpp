#include <gtest/gtest.h>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"
#include "invforms/lattice.hpp"

using namespace invforms;

namespace {

BitVector mod2(const LatticeModule& m, const IntWedgeVector& v) {
  auto c = m.mod2_coordinates(v);
  if (!c) throw std::runtime_error("vector not in lattice mod 2");
  return *c;
}

}  // namespace

TEST(Lattice, RanksTypeC) {
  EXPECT_EQ(generate_weyl_lattice_C(2, 2)->rank(), 5u);
  EXPECT_EQ(generate_weyl_lattice_C(3, 2)->rank(), 14u);
  EXPECT_EQ(generate_weyl_lattice_C(4, 3)->rank(), 48u);
  EXPECT_EQ(generate_weyl_lattice_C(3, 3)->rank(), 14u);
  EXPECT_EQ(expected_rank_C(5, 2), Integer(44));
  EXPECT_THROW(generate_weyl_lattice_C(3, 4), InputError);
}

TEST(Lattice, RanksTypeA) {
  EXPECT_EQ(generate_weyl_lattice_A(3, 1)->rank(), 8u);
  EXPECT_EQ(generate_weyl_lattice_A(4, 1)->rank(), 15u);
  EXPECT_EQ(generate_weyl_lattice_A(5, 2)->rank(), 75u);
  EXPECT_THROW(generate_weyl_lattice_A(4, 2), InputError);
}

TEST(Lattice, SaturatedAndGramParity) {
  for (int l = 2; l <= 5; ++l) {
    for (int k = 1; k <= l; ++k) {
      const auto m = generate_weyl_lattice_C(l, k);
      EXPECT_TRUE(m->saturated()) << l << ' ' << k;
      // wedge^k of a symplectic space: symmetric for even k.
      if (k % 2 == 0) EXPECT_TRUE(m->gram_symmetric());
      for (std::size_t i = 0; i < m->rank(); ++i) EXPECT_TRUE(m->contains(m->basis(i)));
    }
  }
  EXPECT_TRUE(generate_weyl_lattice_A(4, 1)->gram_symmetric());
}

TEST(Lattice, GramIsEvenOnEvenPowers) {
  for (int l = 2; l <= 5; ++l) {
    for (int k = 2; k <= l; k += 2) {
      const auto m = generate_weyl_lattice_C(l, k);
      for (std::size_t i = 0; i < m->rank(); ++i) EXPECT_FALSE(odd(m->gram(i, i)));
    }
  }
}

TEST(Lattice, GammaVectors) {
  const auto a = Ambient::symplectic(2, 2);
  IntWedgeVector y;
  for (int i = 1; i <= 2; ++i) {
    const auto [idx, sign] = a->sp_monomial({i, -i});
    y.add(idx, sign);
  }
  EXPECT_EQ(gamma_vector_C(*a, 0, 0), y);
  EXPECT_EQ(gamma_vector_C(*Ambient::symplectic(6, 4), 1, 1).size(), 10u);
  EXPECT_EQ(gamma_vector_A(*Ambient::sl_tensor(6, 2), 1, 1).size(), 10u);
  EXPECT_THROW(check_gamma_hypothesis_C(3, 0, 1), InputError);
  EXPECT_THROW(check_gamma_hypothesis_C(2, 1, 0), InputError);
  EXPECT_EQ(gamma_shift(7, 1), std::optional<int>(1));
  EXPECT_EQ(gamma_shift(5, 1), std::nullopt);
  EXPECT_EQ(gamma_shift(3, 0), std::optional<int>(0));
}

// Q(gamma) vanishes exactly when 4 divides C(l - t, 2^i).
TEST(Lattice, GammaHalfForm) {
  for (int l : {2, 4, 6}) {
    const auto m = generate_weyl_lattice_C(l, 2);
    const auto g = gamma_vector_C(m->ambient(), 0, 0);
    ASSERT_TRUE(m->mod2_coordinates(g).has_value());
    EXPECT_EQ(q_half_eval(*m, mod2(*m, g)), !binom_div4_criterion(l, 0, 0)) << l;
  }
  const auto m = generate_weyl_lattice_C(5, 4);
  const auto g = gamma_vector_C(m->ambient(), 1, 0);
  EXPECT_EQ(q_half_eval(*m, mod2(*m, g)), !binom_div4_criterion(5, 1, 0));
}

TEST(Lattice, ExtremalPairHasHalfFormOne) {
  for (int l = 2; l <= 4; ++l) {
    const auto m = generate_weyl_lattice_C(l, 2);
    const auto v = extremal_pair(m->ambient());
    EXPECT_TRUE(q_half_eval(*m, mod2(*m, v)));
    EXPECT_FALSE(q_half_eval(*m, BitVector(m->rank())));
  }
  const auto a = generate_weyl_lattice_A(4, 1);
  EXPECT_TRUE(q_half_eval(*a, mod2(*a, extremal_pair(a->ambient()))));
}

TEST(Lattice, ZeroWeightSpanMatchesGenerators) {
  auto check = [](const std::shared_ptr<const LatticeModule>& m, const std::vector<IntWedgeVector>& gens) {
    const auto span = LatticeModule::from_rows(m->ambient_ptr(), gens, {}, false);
    EXPECT_EQ(span->rank(), m->zero_weight_rank());
    for (const auto& g : gens) EXPECT_TRUE(m->contains(g));
    for (std::size_t i = 0; i < m->rank(); ++i) {
      if (m->basis_weight(i) == span->basis_weight(0)) EXPECT_TRUE(span->contains(m->basis(i)));
    }
  };
  for (int l = 2; l <= 5; ++l) {
    for (int k = 2; k <= l; k += 2) {
      const auto m = generate_weyl_lattice_C(l, k);
      check(m, zero_weight_generators_C(m->ambient()));
    }
  }
  for (int n = 3; n <= 5; ++n) {
    const auto m = generate_weyl_lattice_A(n, 1);
    check(m, zero_weight_generators_A(m->ambient()));
  }
}

TEST(Lattice, FixedSpace) {
  EXPECT_EQ(fixed_space_dim(*Ambient::symplectic(2, 2)), 1u);
  EXPECT_EQ(fixed_space_dim(*Ambient::symplectic(3, 2)), 1u);
  EXPECT_EQ(fixed_space_dim(*Ambient::symplectic(4, 2)), 1u);
  EXPECT_EQ(fixed_space_dim(*Ambient::sl_tensor(4, 1)), 1u);
  EXPECT_THROW(fixed_space_dim(*Ambient::symplectic(3, 3)), InputError);
}

TEST(Lattice, RoundTripThroughRows) {
  const auto m = generate_weyl_lattice_C(4, 2);
  const auto r = LatticeModule::from_rows(m->ambient_ptr(), m->basis());
  EXPECT_EQ(r->rank(), m->rank());
  for (std::size_t i = 0; i < m->rank(); ++i) EXPECT_TRUE(r->contains(m->basis(i)));
  EXPECT_EQ(r->radical_mod2().size(), m->radical_mod2().size());
}
