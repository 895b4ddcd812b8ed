#pragma once

// Decision procedures for invariant forms on irreducible modules L(lambda):
// self-duality, the odd-characteristic parity rule, and the characteristic 2
// orthogonality criteria with their reductions.

#include <string>
#include <string_view>
#include <vector>

#include "invforms/rootsys.hpp"

namespace invforms {

enum class Verdict { NotSelfDual, TrivialModule, Orthogonal, SymplecticOnly, Unknown };

std::string_view to_string(Verdict v);
/// Inverse of to_string. Throws InputError.
Verdict parse_verdict(std::string_view s);

/// A verdict and the rule that produced it, as a short machine-readable tag.
struct FormClass {
  Verdict verdict;
  std::string provenance;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

namespace provenance {
inline constexpr std::string_view kTrivial = "trivial";
inline constexpr std::string_view kNotSelfDual = "not-self-dual";
inline constexpr std::string_view kParity = "odd-characteristic-parity";
inline constexpr std::string_view kTensorDecomposable = "tensor-decomposable";
inline constexpr std::string_view kClassicalFundamental = "classical-fundamental";
inline constexpr std::string_view kTypeAPair = "type-a-pair";
inline constexpr std::string_view kTypeBSpin = "type-b-spin-node";
inline constexpr std::string_view kTypeCSpin = "type-c-spin-node";
inline constexpr std::string_view kBToC = "b-to-c-transfer";
inline constexpr std::string_view kDHalfSpin = "d-unequal-spin-nodes";
inline constexpr std::string_view kDNatural = "d-natural";
inline constexpr std::string_view kDToC = "d-to-c-transfer";
inline constexpr std::string_view kG2 = "g2-rule";
inline constexpr std::string_view kF4 = "f4-rule";
inline constexpr std::string_view kTypeETable = "type-e-table";
inline constexpr std::string_view kOpen = "open-problem";
}  // namespace provenance

/// Full dispatch. p is 0 or a prime; throws InputError on bad input.
FormClass classify(const SimpleType& type, const Weight& lambda, int p);

/// Characteristic 2 verdict for L(omega_r) of a classical type.
Verdict mainprop_fundamental(const SimpleType& type, int r);

/// Characteristic 2 verdict for L(omega_r + omega_{n-r}) of SL_n, 1 <= r < n-r.
Verdict quadpropA(int n, int r);

/// H^1(Sp_{2l}, L(omega_r)) != 0 in characteristic 2.
bool h1_nonzero_C(int l, int r);
/// H^1(SL_n, L(omega_r + omega_s)) != 0 in characteristic 2, 1 <= r < s <= n-1.
bool h1_nonzero_A(int n, int r, int s);

/// Orthogonality of the two-part symmetric group module D^{(n-r,r)} in
/// characteristic 2.
Verdict symgroup_classify(int n, int r);

/// The exceptional-type verdicts known in characteristic 2.
struct TypeERow {
  SimpleType type;
  Weight weight;
  Verdict verdict;
};
const std::vector<TypeERow>& type_e_table();

/// Splits lambda = sum 2^j lambda_j with every lambda_j 2-restricted.
std::vector<Weight> steinberg_layers(const Weight& lambda);

}  // namespace invforms
