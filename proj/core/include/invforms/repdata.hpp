#pragma once

// Composition factors, branching characters and dimensions for the Weyl
// modules V(omega_r) of Sp_{2l} and V(omega_r + omega_s) of SL_n.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "invforms/integer.hpp"
#include "invforms/rootsys.hpp"

namespace invforms {

enum class FactorFamily { CFundamental, APair };

/// Label of an irreducible factor: j for L(omega_j) of type C (omega_0 = 0),
/// or a pair (j, j') for type A. Branching results for type A use the pair
/// (x, y) of pi_{x,y} = L(omega_x + omega_{n-y}) on the smaller group.
struct FactorLabel {
  int first = 0;
  int second = 0;

  std::string to_string(FactorFamily family) const;
  friend auto operator<=>(const FactorLabel&, const FactorLabel&) = default;
};

struct CompFactorSet {
  FactorFamily family;
  std::vector<FactorLabel> labels;  // sorted, highest weight label first

  bool contains(FactorLabel label) const;
};

struct BranchEntry {
  FactorLabel label;
  int multiplicity;

  friend bool operator==(const BranchEntry&, const BranchEntry&) = default;
};

struct BranchCharacter {
  FactorFamily family;
  std::vector<BranchEntry> entries;
  int d_val = 0;
  int epsilon = 0;
};

/// J_p(r) for V(omega_r) of C_l.
CompFactorSet comp_factors_C(int l, int r, int p);
/// J_p(r, s) for V(omega_r + omega_s) of SL_n, 1 <= r < s <= n-1.
CompFactorSet comp_factors_A(int n, int r, int s, int p);

/// Factors of L(omega_r) restricted from C_l to C_{l-1}. Labels outside
/// 0..l-1 are zero modules and are dropped.
BranchCharacter branch_C(int l, int r, int p);
/// Factors of pi_{r,s} restricted from SL_n to SL_{n-1}, with pi labels of
/// the smaller group. 0 <= r <= n-s <= n.
BranchCharacter branch_A(int n, int r, int s, int p);

/// Dimension of the Weyl module V(lambda), from the product formula.
Integer weyl_dim(const SimpleType& type, const Weight& lambda);

/// dim L(omega_r) for C_l, r = 0 giving the trivial module.
Integer irr_dim_C(int l, int r, int p);
/// dim L(omega_a + omega_b) for SL_n with omega_0 = omega_n = 0.
Integer irr_dim_A(int n, int a, int b, int p);
/// Dispatch on the family; for APair the label is (a, b) as in irr_dim_A.
Integer irr_dim(FactorFamily family, int rank_param, FactorLabel label, int p);
/// dim pi_{x,y} of SL_n, zero outside 0 <= x, 0 <= y, x + y <= n.
Integer pi_dim(int n, int x, int y, int p);

/// Dominant weight multiplicities of V(lambda) by Freudenthal's formula,
/// keyed by dominant weight.
std::map<Weight, std::int64_t> dominant_multiplicities(const SimpleType& type,
                                                       const Weight& lambda);
/// The dominant Weyl conjugate of an integral weight given in fundamental
/// coordinates (coefficients may be negative).
std::vector<int> dominant_conjugate(const RootDatum& datum, std::vector<int> mu);

}  // namespace invforms
