#include "invforms/classify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"

namespace invforms {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 5> kVerdictNames{{
    {Verdict::NotSelfDual, "NotSelfDual"},
    {Verdict::TrivialModule, "TrivialModule"},
    {Verdict::Orthogonal, "Orthogonal"},
    {Verdict::SymplecticOnly, "SymplecticOnly"},
    {Verdict::Unknown, "Unknown"},
}};

FormClass make(Verdict v, std::string_view tag) { return {v, std::string(tag)}; }

// Bits i and i+1 of x are both set, i.e. x = 2^{i+1} + 2^i + t mod 2^{i+2}
// with 0 <= t < 2^i.
bool top_two_bits(std::int64_t x, int i) { return ((x >> i) & 3) == 3; }

// r = 2^{i+1} with l+1 = 2^{i+1} + 2^i + t mod 2^{i+2}.
bool spin_like_failure(int l, int r) {
  if (r < 2 || !is_power_of_two(r)) return false;
  return top_two_bits(l + 1, exact_log2(r) - 1);
}

std::vector<int> support(const Weight& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w[i] != 0) out.push_back(i);
  }
  return out;
}

FormClass restricted_c(int l, const Weight& mu);

FormClass restricted_a(int l, const Weight& mu) {
  const int n = l + 1;
  const auto s = support(mu);
  if (s.size() == 1 && 2 * s[0] == n) {
    return make(mainprop_fundamental(SimpleType(Family::A, l), s[0]),
                provenance::kClassicalFundamental);
  }
  if (s.size() == 2 && s[0] + s[1] == n) {
    return make(quadpropA(n, s[0]), provenance::kTypeAPair);
  }
  return make(Verdict::Unknown, provenance::kOpen);
}

FormClass restricted_c(int l, const Weight& mu) {
  const Weight top = Weight::fundamental(l, l);
  if (mu[l] == 1) {
    if (l == 2 && mu == top) {
      return make(mainprop_fundamental(SimpleType(Family::C, l), l),
                  provenance::kClassicalFundamental);
    }
    return make(Verdict::Orthogonal, provenance::kTypeCSpin);
  }
  if (int r = mu.fundamental_index(); r != 0) {
    return make(mainprop_fundamental(SimpleType(Family::C, l), r),
                provenance::kClassicalFundamental);
  }
  return make(Verdict::Unknown, provenance::kOpen);
}

FormClass transferred(FormClass inner, std::string_view tag) {
  if (inner.verdict == Verdict::Unknown) return inner;
  inner.provenance = std::string(tag);
  return inner;
}

FormClass restricted_b(int l, const Weight& mu) {
  if (mu[l] == 1) {
    if (l == 2 && mu == Weight::fundamental(l, l)) {
      return make(Verdict::SymplecticOnly, provenance::kTypeBSpin);
    }
    return make(Verdict::Orthogonal, provenance::kTypeBSpin);
  }
  return transferred(restricted_c(l, mu), provenance::kBToC);
}

FormClass restricted_d(int l, const Weight& mu) {
  if (mu[l - 1] != mu[l]) return make(Verdict::Orthogonal, provenance::kDHalfSpin);
  if (mu == Weight::fundamental(l, 1)) return make(Verdict::Orthogonal, provenance::kDNatural);
  std::vector<int> c = mu.coeffs();
  c[static_cast<std::size_t>(l - 1)] = 0;
  return transferred(restricted_c(l, Weight(std::move(c))), provenance::kDToC);
}

FormClass restricted_exceptional(const SimpleType& type, const Weight& mu) {
  switch (type.family()) {
    case Family::G2:
      return make(mu == Weight{1, 0} ? Verdict::SymplecticOnly : Verdict::Orthogonal,
                  provenance::kG2);
    case Family::F4:
      return make(Verdict::Orthogonal, provenance::kF4);
    default:
      break;
  }
  for (const auto& row : type_e_table()) {
    if (row.type == type && row.weight == mu) return make(row.verdict, provenance::kTypeETable);
  }
  return make(Verdict::Unknown, provenance::kOpen);
}

// mu is nonzero, self-dual and 2-restricted.
FormClass classify_restricted(const SimpleType& type, const Weight& mu) {
  const int l = type.rank();
  switch (type.family()) {
    case Family::A: return restricted_a(l, mu);
    case Family::B: return restricted_b(l, mu);
    case Family::C: return restricted_c(l, mu);
    case Family::D: return restricted_d(l, mu);
    default: return restricted_exceptional(type, mu);
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  for (const auto& [verdict, name] : kVerdictNames) {
    if (verdict == v) return name;
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  for (const auto& [verdict, name] : kVerdictNames) {
    if (name == s) return verdict;
  }
  throw InputError("unknown verdict '" + std::string(s) + "'");
}

std::vector<Weight> steinberg_layers(const Weight& lambda) {
  std::vector<Weight> layers;
  std::vector<int> rest = lambda.coeffs();
  while (std::any_of(rest.begin(), rest.end(), [](int c) { return c != 0; })) {
    std::vector<int> bits(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bits[i] = rest[i] & 1;
      rest[i] >>= 1;
    }
    layers.emplace_back(std::move(bits));
  }
  return layers;
}

FormClass classify(const SimpleType& type, const Weight& lambda, int p) {
  validate_weight(type, lambda);
  if (p != 0) require_prime(p);
  if (lambda.is_zero()) return make(Verdict::TrivialModule, provenance::kTrivial);
  // Closed form, so large classical ranks never build the root system.
  const DParity parity = d_parity_closed_form(type, lambda);
  if (parity == DParity::NotSelfDual) return make(Verdict::NotSelfDual, provenance::kNotSelfDual);

  if (p != 2) {
    return make(parity == DParity::Even ? Verdict::Orthogonal : Verdict::SymplecticOnly, provenance::kParity);
  }

  // Two or more nontrivial twisted factors: a tensor product of symplectic
  // modules, hence orthogonal. Otherwise the module is a twist of one
  // 2-restricted factor.
  const auto layers = steinberg_layers(lambda);
  const Weight* single = nullptr;
  for (const auto& layer : layers) {
    if (layer.is_zero()) continue;
    if (single) return make(Verdict::Orthogonal, provenance::kTensorDecomposable);
    single = &layer;
  }
  return classify_restricted(type, *single);
}

Verdict mainprop_fundamental(const SimpleType& type, int r) {
  const int l = type.rank();
  if (!type.is_classical()) throw InputError("mainprop_fundamental needs a classical type");
  if (r < 1 || r > l) throw InputError("index r out of range 1.." + std::to_string(l));
  switch (type.family()) {
    case Family::A:
      if (2 * r != l + 1) return Verdict::NotSelfDual;
      // SL_2 = Sp_2: the natural module carries no invariant quadratic form.
      return l == 1 ? Verdict::SymplecticOnly : Verdict::Orthogonal;
    case Family::B:
    case Family::C:
      if (r == 1 || spin_like_failure(l, r)) return Verdict::SymplecticOnly;
      return Verdict::Orthogonal;
    case Family::D:
      if (l % 2 == 1 && r >= l - 1) return Verdict::NotSelfDual;
      if (l >= 6 && spin_like_failure(l, r)) return Verdict::SymplecticOnly;
      return Verdict::Orthogonal;
    default:
      break;
  }
  throw InternalError("unreachable family in mainprop_fundamental");
}

Verdict quadpropA(int n, int r) {
  if (n < 3 || r < 1 || r >= n - r) {
    throw InputError("quadpropA needs n >= 3 and 1 <= r < n - r");
  }
  if (is_power_of_two(r) && top_two_bits(n + 1, exact_log2(r))) return Verdict::SymplecticOnly;
  return Verdict::Orthogonal;
}

bool h1_nonzero_C(int l, int r) {
  if (l < 1 || r < 1 || r > l) throw InputError("h1_nonzero_C needs 1 <= r <= l");
  if (r < 2 || !is_power_of_two(r)) return false;
  return (((l + 1) >> (exact_log2(r) - 1)) & 1) != 0;
}

bool h1_nonzero_A(int n, int r, int s) {
  if (r < 1 || r >= s || s > n - 1) throw InputError("h1_nonzero_A needs 1 <= r < s <= n - 1");
  if (!is_power_of_two(r) || s != n - r) return false;
  return (((n + 1) >> exact_log2(r)) & 1) != 0;
}

Verdict symgroup_classify(int n, int r) {
  if (n < 2 || r < 0 || 2 * r > n) throw InputError("symgroup_classify needs n >= 2, 0 <= 2r <= n");
  if (!is_power_of_two(r)) return Verdict::Orthogonal;
  const int j = exact_log2(r);
  const std::int64_t modulus = std::int64_t{1} << (j + 2);
  const std::int64_t k = n % modulus;
  const std::int64_t lo = (std::int64_t{1} << (j + 1)) + (std::int64_t{1} << j) - 1;
  return (k >= lo && k <= modulus - 2) ? Verdict::SymplecticOnly : Verdict::Orthogonal;
}

const std::vector<TypeERow>& type_e_table() {
  static const std::vector<TypeERow> rows = [] {
    const SimpleType e6(Family::E6, 6), e7(Family::E7, 7), e8(Family::E8, 8);
    auto w = [](int rank, std::initializer_list<int> idx) {
      Weight out = Weight::zero(rank);
      for (int i : idx) out = out + Weight::fundamental(rank, i);
      return out;
    };
    return std::vector<TypeERow>{
        {e6, w(6, {2}), Verdict::Orthogonal},
        {e6, w(6, {4}), Verdict::Orthogonal},
        {e6, w(6, {1, 6}), Verdict::Orthogonal},
        {e7, w(7, {1}), Verdict::SymplecticOnly},
        {e7, w(7, {2}), Verdict::Orthogonal},
        {e7, w(7, {5}), Verdict::Orthogonal},
        {e7, w(7, {6}), Verdict::Orthogonal},
        {e7, w(7, {7}), Verdict::Orthogonal},
        {e8, w(8, {1}), Verdict::Orthogonal},
        {e8, w(8, {7}), Verdict::Orthogonal},
        {e8, w(8, {8}), Verdict::Orthogonal},
    };
  }();
  return rows;
}

}  // namespace invforms
