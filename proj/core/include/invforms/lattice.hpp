#pragma once

// Weyl lattices U_Z v+ inside a wedge ambient: integral basis, Gram matrix of
// the ambient pairing, reduction mod 2, radicals and the half-form Q.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "invforms/gf2.hpp"
#include "invforms/integer.hpp"
#include "invforms/wedge.hpp"

namespace invforms {

struct LatticeLimits {
  std::size_t ambient_cap = kDefaultAmbientCap;
  /// Worklist / certificate rounds before giving up.
  std::size_t max_rounds = 32;
  /// Check closure under every root (true) or only the simple ones, which
  /// already generate the hyperalgebra.
  bool certify_all_roots = true;
};

/// Sparse lattice coordinates: basis index -> coefficient.
using LatticeCoords = std::map<std::size_t, Integer>;

class LatticeModule {
 public:
  /// Closes the highest monomial of the ambient under the divided powers.
  static std::shared_ptr<const LatticeModule> generate(std::shared_ptr<const Ambient> ambient,
                                                       const LatticeLimits& limits = {});
  /// Rebuilds a module from stored basis vectors (e.g. the on-disk cache).
  /// The rows are re-echelonised; closure is re-certified when asked.
  static std::shared_ptr<const LatticeModule> from_rows(std::shared_ptr<const Ambient> ambient,
                                                        const std::vector<IntWedgeVector>& rows,
                                                        const LatticeLimits& limits = {}, bool certify = true);

  const Ambient& ambient() const noexcept { return *ambient_; }
  const std::shared_ptr<const Ambient>& ambient_ptr() const noexcept { return ambient_; }

  std::size_t rank() const noexcept { return basis_.size(); }
  const IntWedgeVector& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<IntWedgeVector>& basis() const noexcept { return basis_; }
  /// Ambient weight id of basis vector i.
  std::size_t basis_weight(std::size_t i) const { return basis_weight_[i]; }
  /// Basis vectors of one weight occupy [block_begin, block_begin + block_size).
  std::size_t block_begin(std::size_t weight_id) const { return block_begin_[weight_id]; }
  std::size_t block_size(std::size_t weight_id) const { return blocks_[weight_id].rows.size(); }
  /// Rank of the lattice in the zero weight space (0 if there is none).
  std::size_t zero_weight_rank() const;

  /// Integral coordinates, or nothing when v is not in the lattice.
  std::optional<LatticeCoords> coordinates(const IntWedgeVector& v) const;
  bool contains(const IntWedgeVector& v) const { return coordinates(v).has_value(); }
  /// Coordinates mod 2 of an ambient vector whose reduction lies in the
  /// span of the basis mod 2, or nothing.
  std::optional<BitVector> mod2_coordinates(const IntWedgeVector& v) const;
  /// True when the basis stays independent mod 2, i.e. the lattice is a
  /// direct summand of the ambient lattice.
  bool saturated() const;

  Integer gram(std::size_t a, std::size_t b) const;
  /// Sparse Gram block between weight mu and -mu, rows indexed by block mu.
  const std::vector<std::vector<Integer>>& gram_block(std::size_t weight_id) const {
    return gram_[weight_id];
  }
  std::optional<std::size_t> opposite_block(std::size_t weight_id) const { return opposite_[weight_id]; }
  bool gram_symmetric() const;
  /// x^T G x for integral coordinates.
  Integer q_value(const LatticeCoords& x) const;

  Gf2Matrix gram_mod2() const;
  /// Basis of the radical of the Gram form mod 2, in lattice coordinates.
  std::vector<BitVector> radical_mod2() const;
  /// images[j] = coordinates mod 2 of X_alpha^(m) applied to basis vector j.
  std::vector<BitVector> operator_images_mod2(std::size_t root, int m) const;

  /// Operator sweeps the closure needed, including the certificate pass.
  std::size_t rounds() const noexcept { return rounds_; }

 private:
  struct Block {
    std::vector<std::vector<Integer>> rows;  // dense over the weight space
    std::vector<std::size_t> pivots;          // increasing
  };

  explicit LatticeModule(std::shared_ptr<const Ambient> ambient);
  std::size_t local(std::size_t monomial) const { return local_index_[monomial]; }
  bool insert(const IntWedgeVector& v);
  std::vector<Integer> dense(const IntWedgeVector& v, std::size_t weight_id) const;
  std::optional<std::vector<Integer>> solve_block(std::size_t weight_id, std::vector<Integer> v) const;
  void close(std::vector<IntWedgeVector> work, const LatticeLimits& limits);
  void finalize();

  std::shared_ptr<const Ambient> ambient_;
  std::vector<std::size_t> local_index_;
  std::vector<Block> blocks_;
  std::vector<IntWedgeVector> basis_;
  std::vector<std::size_t> basis_weight_;
  std::vector<std::size_t> block_begin_;
  std::vector<std::optional<std::size_t>> opposite_;
  std::vector<std::vector<std::vector<Integer>>> gram_;
  std::size_t rounds_ = 0;
};

/// V(omega_k) of Sp_{2l} inside wedge^k.
std::shared_ptr<const LatticeModule> generate_weyl_lattice_C(int l, int k, const LatticeLimits& limits = {});
/// V(omega_k + omega_{n-k}) of SL_n inside wedge^k (x) wedge^k*.
std::shared_ptr<const LatticeModule> generate_weyl_lattice_A(int n, int k, const LatticeLimits& limits = {});

/// Expected ranks: C(2l,k) - C(2l,k-2), and the Weyl dimension for type A.
Integer expected_rank_C(int l, int k);
Integer expected_rank_A(int n, int k);

/// sum of y_I over 2^i-subsets I of {1..l-t}, y_i = e_i ^ e_{-i}, in wedge^{2^{i+1}}.
IntWedgeVector gamma_vector_C(const Ambient& ambient, int i, int t);
/// sum of e_I (x) e_I* over 2^i-subsets I of {1..n-t}, in wedge^{2^i} (x) wedge^{2^i}*.
IntWedgeVector gamma_vector_A(const Ambient& ambient, int i, int t);
/// Throws InputError unless (l, i, t) satisfies the gamma hypotheses.
void check_gamma_hypothesis_C(int l, int i, int t);
void check_gamma_hypothesis_A(int n, int i, int t);
/// All admissible t for (l, i), i.e. at most one value.
std::optional<int> gamma_shift(std::int64_t rank_plus_one, int i);

/// alpha + beta with alpha = e_1^..^e_k and beta = e_{-1}^..^e_{-k} (type C),
/// or v+ plus its partner (type A).
IntWedgeVector extremal_pair(const Ambient& ambient);

/// Spanning vectors of the zero weight space of the Weyl lattice.
std::vector<IntWedgeVector> zero_weight_generators_C(const Ambient& ambient);
std::vector<IntWedgeVector> zero_weight_generators_A(const Ambient& ambient);

/// Dimension over GF(2) of the zero weight vectors of the ambient killed by
/// every X_alpha^(m), m >= 1.
std::size_t fixed_space_dim(const Ambient& ambient);

/// (q(v)/2) mod 2 for the 0/1 lift of v; throws InternalError on odd q.
bool q_half_eval(const LatticeModule& module, const BitVector& v);

}  // namespace invforms
