#pragma once

// Root systems of the simple types A_l .. E_8 in Bourbaki numbering, and the
// weight arithmetic needed to decide self-duality and the sign of the
// invariant bilinear form: -w0, d(lambda) and its parity.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace invforms {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

std::string_view to_string(Family f);
/// Parses "A", "B", ..., "G2", "F4", "E6", "E7", "E8". Throws InputError.
Family parse_family(std::string_view s);

/// A simple type with its rank. Construction validates the rank bounds
/// (A_l l>=1, B_l/C_l l>=2, D_l l>=4, exceptional ranks fixed).
class SimpleType {
 public:
  SimpleType(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_classical() const noexcept;
  std::string name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Dominant weight sum m_i omega_i, stored as its coefficients m_1..m_l.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs);
  Weight(std::initializer_list<int> coeffs);

  /// The fundamental weight omega_i (1-based) for a group of the given rank.
  static Weight fundamental(int rank, int i);
  static Weight zero(int rank);

  int size() const noexcept { return static_cast<int>(coeffs_.size()); }
  /// Coefficient of omega_i, 1-based as in the literature.
  int operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  /// True when every coefficient lies in [0, p-1].
  bool is_restricted(int p) const noexcept;
  /// Index i when the weight equals omega_i, otherwise 0.
  int fundamental_index() const noexcept;

  Weight operator+(const Weight& other) const;
  Weight scaled(int factor) const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coeffs_;
};

/// Positive roots (simple-root coordinates), coroot pairings <omega_i, alpha^vee>
/// and the diagram permutation realising -w0 for one simple type.
class RootDatum {
 public:
  /// Shared, lazily built datum; safe to call from several threads.
  static std::shared_ptr<const RootDatum> get(const SimpleType& type);

  explicit RootDatum(const SimpleType& type);

  const SimpleType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }
  const std::vector<std::vector<int>>& positive_roots() const noexcept { return roots_; }
  /// Row per positive root: <omega_i, alpha^vee> for i = 1..rank.
  const std::vector<std::vector<int>>& coroot_pairing() const noexcept { return pairing_; }
  /// 0-based permutation p with -w0(omega_{i+1}) = omega_{p[i]+1}.
  const std::vector<int>& w0_permutation() const noexcept { return w0_; }
  /// Squared length of each simple root, normalised so the shortest is 1 or 2.
  const std::vector<int>& simple_root_norms() const noexcept { return norms_; }
  /// Symmetric matrix (alpha_i, alpha_j).
  const std::vector<std::vector<int>>& inner_products() const noexcept { return inner_; }

  /// Cartan integer <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const;

 private:
  SimpleType type_;
  std::vector<int> norms_;
  std::vector<std::vector<int>> inner_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> pairing_;
  std::vector<int> w0_;
};

/// Number of positive roots for the type, from the classical formulas.
std::size_t expected_positive_root_count(const SimpleType& type);

Weight minus_w0(const RootDatum& datum, const Weight& weight);
bool is_self_dual(const RootDatum& datum, const Weight& weight);
/// d(lambda) = sum over positive roots of <lambda, alpha^vee>.
std::int64_t d_lambda(const RootDatum& datum, const Weight& weight);

enum class DParity { Even, Odd, NotSelfDual };

std::string_view to_string(DParity p);

/// Closed-form parity of d(lambda) for self-dual weights, read off the
/// coefficients without enumerating roots.
DParity d_parity_closed_form(const SimpleType& type, const Weight& weight);

/// Self-dual weights mu_1..mu_t such that every self-dual dominant weight is a
/// unique non-negative integer combination of them.
std::vector<Weight> self_dual_generators(const SimpleType& type);

/// One row of the duality table: when the weight is self-dual, and the parity
/// rule for d(lambda), both as human-readable text.
struct DualityRow {
  std::string type;
  std::string self_dual_condition;
  std::string parity_rule;
};

std::vector<DualityRow> duality_table();

void validate_weight(const SimpleType& type, const Weight& weight);

}  // namespace invforms
