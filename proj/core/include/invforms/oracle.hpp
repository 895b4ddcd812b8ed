#pragma once

// Brute-force orthogonality deciders built on the Weyl lattices: one reads Q
// off the radical of the Gram form, the other solves for an invariant
// quadratic form on L = V / rad directly.

#include <cstddef>
#include <string>

#include "invforms/classify.hpp"
#include "invforms/lattice.hpp"
#include "invforms/repdata.hpp"

namespace invforms {

struct OracleReport {
  Verdict verdict = Verdict::Unknown;
  std::size_t dim_weyl = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_irreducible = 0;
  /// Number of linear conditions on Q (solver only).
  std::size_t equations = 0;
};

/// L(omega_r) of C_l, r even: Orthogonal iff Q vanishes on rad b.
OracleReport oracle_gram_C(int l, int r, const LatticeLimits& limits = {});
OracleReport oracle_gram(const LatticeModule& module);

/// Invariant quadratic form search on V/rad for L(omega_k) of C_l or
/// L(omega_k + omega_{n-k}) of SL_n (family APair, param n).
OracleReport oracle_solver(FactorFamily family, int param, int k, const LatticeLimits& limits = {});
OracleReport oracle_solver(const LatticeModule& module);

}  // namespace invforms
