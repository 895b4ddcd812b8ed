#pragma once

// Exterior powers carrying Chevalley divided-power operators:
//   Sp: wedge^k(V), V of dimension 2l with basis e_{-l} .. e_{-1}, e_1 .. e_l;
//   SL: wedge^k(V) (x) wedge^k(V*), V of dimension n.
// A basis monomial is a bit mask over positions. Sp positions run through the
// signed indices in integer order; SL positions are e_1..e_n followed by
// e_1*..e_n*. Signs always refer to increasing position order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invforms/integer.hpp"

namespace invforms {

enum class AmbientKind { Symplectic, SlTensor };

inline constexpr std::size_t kDefaultAmbientCap = 20000;

/// Sparse integer vector over ambient monomial indices; no zero entries.
class IntWedgeVector {
 public:
  using Terms = std::map<std::size_t, Integer>;

  IntWedgeVector() = default;

  void add(std::size_t index, const Integer& coeff);
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coeff(std::size_t index) const;

  IntWedgeVector& operator+=(const IntWedgeVector& other);
  IntWedgeVector operator-() const;
  IntWedgeVector scaled(const Integer& c) const;
  friend bool operator==(const IntWedgeVector&, const IntWedgeVector&) = default;

 private:
  Terms terms_;
};

/// A Chevalley root vector X_alpha acting on V (and V*): each position maps to
/// at most one position, with a sign.
struct RootOperator {
  std::vector<int> root;  // epsilon coordinates
  std::string label;
  std::uint64_t sources = 0;
  std::vector<int> target;  // per position, -1 when killed
  std::vector<int> sign;
};

/// One term of an operator image: monomial index and sign.
struct SignedIndex {
  std::size_t index;
  int sign;
};

class Ambient {
 public:
  /// wedge^k of the natural module of Sp_{2l}.
  static std::shared_ptr<const Ambient> symplectic(int l, int k, std::size_t cap = kDefaultAmbientCap);
  /// wedge^k(V) (x) wedge^k(V*) for SL_n.
  static std::shared_ptr<const Ambient> sl_tensor(int n, int k, std::size_t cap = kDefaultAmbientCap);

  AmbientKind kind() const noexcept { return kind_; }
  /// l for Sp, n for SL.
  int param() const noexcept { return param_; }
  int degree() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  int positions() const noexcept { return positions_; }

  std::uint64_t monomial(std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(std::uint64_t mask) const;
  /// epsilon coordinates of the weight of monomial i.
  const std::vector<int>& weight(std::size_t i) const { return weights_[weight_id_[i]]; }
  std::size_t weight_id(std::size_t i) const { return weight_id_[i]; }
  std::size_t weight_count() const noexcept { return weights_.size(); }
  const std::vector<int>& weight_by_id(std::size_t id) const { return weights_[id]; }
  const std::vector<std::size_t>& weight_space(std::size_t id) const { return spaces_[id]; }
  std::optional<std::size_t> find_weight(const std::vector<int>& w) const;

  const std::vector<RootOperator>& roots() const noexcept { return roots_; }
  /// Indices into roots() of the simple roots and their negatives.
  const std::vector<std::size_t>& positive_simple() const noexcept { return pos_simple_; }
  const std::vector<std::size_t>& negative_simple() const noexcept { return neg_simple_; }
  /// Largest m with X_alpha^(m) possibly nonzero.
  int max_power(std::size_t root) const;

  /// X_alpha^(m) applied to one monomial.
  std::vector<SignedIndex> apply(std::size_t root, int m, std::size_t monomial) const;
  IntWedgeVector apply(std::size_t root, int m, const IntWedgeVector& v) const;

  /// The unique monomial pairing nontrivially with i, and the pairing value.
  SignedIndex partner(std::size_t i) const { return partner_[i]; }
  Integer pairing(const IntWedgeVector& a, const IntWedgeVector& b) const;

  /// The highest weight vector the Weyl module is generated from.
  std::size_t highest_monomial() const noexcept { return highest_; }

  /// Monomial index for signed indices (Sp) or for V and V* index sets (SL);
  /// the sign reorders the given sequence into increasing position order.
  SignedIndex sp_monomial(const std::vector<int>& signed_indices) const;
  SignedIndex sl_monomial(const std::vector<int>& v_indices, const std::vector<int>& dual_indices) const;

  std::string describe(std::size_t i) const;

 private:
  Ambient() = default;
  void enumerate(std::size_t cap);
  void finish();

  AmbientKind kind_ = AmbientKind::Symplectic;
  int param_ = 0;
  int k_ = 0;
  int positions_ = 0;
  std::vector<std::uint64_t> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::vector<int>> weights_;
  std::map<std::vector<int>, std::size_t> weight_lookup_;
  std::vector<std::size_t> weight_id_;
  std::vector<std::vector<std::size_t>> spaces_;
  std::vector<RootOperator> roots_;
  std::vector<std::size_t> pos_simple_;
  std::vector<std::size_t> neg_simple_;
  std::vector<SignedIndex> partner_;
  std::vector<std::vector<int>> position_weight_;
  std::size_t highest_ = 0;
};

/// Sign of the permutation sorting a sequence of distinct integers.
int sort_sign(std::vector<int> seq);

}  // namespace invforms
