#include "invforms/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "invforms/errors.hpp"
#include "invforms/repdata.hpp"

namespace invforms {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// a*x + b*y = g > 0
void xgcd(const Integer& x, const Integer& y, Integer& g, Integer& a, Integer& b) {
  Integer r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  a = s0;
  b = t0;
}

void axpy(std::vector<Integer>& v, const Integer& c, const std::vector<Integer>& r) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (r[i] != 0) v[i] -= c * r[i];
  }
}

std::size_t first_nonzero(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      f(cur);
      return;
    }
    for (int x = start; x <= n - (size - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

// Sets of `count` disjoint pairs (lo < hi) in 1..n, listed with increasing lo.
void for_each_pairing(int n, int count,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> rec = [&](int min_lo) {
    if (static_cast<int>(cur.size()) == count) {
      f(cur);
      return;
    }
    for (int lo = min_lo; lo <= n; ++lo) {
      if (used[lo]) continue;
      used[lo] = true;
      for (int hi = lo + 1; hi <= n; ++hi) {
        if (used[hi]) continue;
        used[hi] = true;
        cur.emplace_back(lo, hi);
        rec(lo + 1);
        cur.pop_back();
        used[hi] = false;
      }
      used[lo] = false;
    }
  };
  rec(1);
}

}  // namespace

LatticeModule::LatticeModule(std::shared_ptr<const Ambient> ambient)
    : ambient_(std::move(ambient)),
      local_index_(ambient_->dimension()),
      blocks_(ambient_->weight_count()) {
  for (std::size_t w = 0; w < ambient_->weight_count(); ++w) {
    const auto& space = ambient_->weight_space(w);
    for (std::size_t c = 0; c < space.size(); ++c) local_index_[space[c]] = c;
  }
}

std::vector<Integer> LatticeModule::dense(const IntWedgeVector& v, std::size_t weight_id) const {
  std::vector<Integer> out(ambient_->weight_space(weight_id).size());
  for (const auto& [i, c] : v.terms()) {
    if (ambient_->weight_id(i) != weight_id) throw InternalError("vector is not a weight vector");
    out[local(i)] = c;
  }
  return out;
}

bool LatticeModule::insert(const IntWedgeVector& vec) {
  if (vec.empty()) return false;
  const std::size_t wid = ambient_->weight_id(vec.terms().begin()->first);
  Block& b = blocks_[wid];
  std::vector<Integer> v = dense(vec, wid);
  bool changed = false;
  for (;;) {
    const std::size_t c = first_nonzero(v);
    if (c == v.size()) break;
    auto it = std::lower_bound(b.pivots.begin(), b.pivots.end(), c);
    const auto pos = static_cast<std::size_t>(it - b.pivots.begin());
    if (it == b.pivots.end() || *it != c) {
      if (v[c] < 0) {
        for (auto& x : v) x = -x;
      }
      b.pivots.insert(it, c);
      b.rows.insert(b.rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
      changed = true;
      break;
    }
    std::vector<Integer>& r = b.rows[pos];
    if (v[c] % r[c] == 0) {
      axpy(v, v[c] / r[c], r);
      continue;
    }
    Integer g, a, bb;
    xgcd(r[c], v[c], g, a, bb);
    std::vector<Integer> nr(v.size()), nv(v.size());
    const Integer vc = v[c] / g, rc = r[c] / g;
    for (std::size_t i = 0; i < v.size(); ++i) {
      nr[i] = a * r[i] + bb * v[i];
      nv[i] = vc * r[i] - rc * v[i];
    }
    r = std::move(nr);
    v = std::move(nv);
    changed = true;
  }
  if (changed) {
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      for (std::size_t j = i + 1; j < b.rows.size(); ++j) {
        const std::size_t c = b.pivots[j];
        axpy(b.rows[i], floor_div(b.rows[i][c], b.rows[j][c]), b.rows[j]);
      }
    }
  }
  return changed;
}

std::optional<std::vector<Integer>> LatticeModule::solve_block(std::size_t weight_id,
                                                               std::vector<Integer> v) const {
  const Block& b = blocks_[weight_id];
  std::vector<Integer> coeffs(b.rows.size());
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    const std::size_t c = b.pivots[i];
    if (v[c] == 0) continue;
    if (v[c] % b.rows[i][c] != 0) return std::nullopt;
    coeffs[i] = v[c] / b.rows[i][c];
    axpy(v, coeffs[i], b.rows[i]);
  }
  if (first_nonzero(v) != v.size()) return std::nullopt;
  return coeffs;
}

void LatticeModule::close(std::vector<IntWedgeVector> work, const LatticeLimits& limits) {
  std::deque<IntWedgeVector> queue(std::make_move_iterator(work.begin()), std::make_move_iterator(work.end()));
  const Ambient& amb = *ambient_;
  std::vector<std::size_t> certify;
  if (limits.certify_all_roots) {
    for (std::size_t r = 0; r < amb.roots().size(); ++r) certify.push_back(r);
  } else {
    certify = amb.positive_simple();
    certify.insert(certify.end(), amb.negative_simple().begin(), amb.negative_simple().end());
  }
  for (;;) {
    while (!queue.empty()) {
      IntWedgeVector v = std::move(queue.front());
      queue.pop_front();
      for (std::size_t r : amb.negative_simple()) {
        for (int m = 1; m <= amb.max_power(r); ++m) {
          IntWedgeVector w = amb.apply(r, m, v);
          if (insert(w)) queue.push_back(std::move(w));
        }
      }
    }
    if (++rounds_ > limits.max_rounds) {
      throw InternalError("lattice closure did not stabilise after " + std::to_string(limits.max_rounds) +
                          " rounds");
    }
    std::vector<IntWedgeVector> snapshot;
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
      const auto& space = amb.weight_space(w);
      for (const auto& row : blocks_[w].rows) {
        IntWedgeVector v;
        for (std::size_t c = 0; c < row.size(); ++c) v.add(space[c], row[c]);
        snapshot.push_back(std::move(v));
      }
    }
    bool stable = true;
    for (const auto& v : snapshot) {
      for (std::size_t r : certify) {
        for (int m = 1; m <= amb.max_power(r); ++m) {
          IntWedgeVector w = amb.apply(r, m, v);
          if (insert(w)) {
            queue.push_back(std::move(w));
            stable = false;
          }
        }
      }
    }
    if (stable) break;
  }
}

void LatticeModule::finalize() {
  const Ambient& amb = *ambient_;
  block_begin_.assign(blocks_.size(), 0);
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    block_begin_[w] = basis_.size();
    const auto& space = amb.weight_space(w);
    for (const auto& row : blocks_[w].rows) {
      IntWedgeVector v;
      for (std::size_t c = 0; c < row.size(); ++c) v.add(space[c], row[c]);
      basis_.push_back(std::move(v));
      basis_weight_.push_back(w);
    }
  }
  opposite_.assign(blocks_.size(), std::nullopt);
  gram_.assign(blocks_.size(), {});
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    if (blocks_[w].rows.empty()) continue;
    std::vector<int> neg = amb.weight_by_id(w);
    for (int& x : neg) x = -x;
    const auto o = amb.find_weight(neg);
    if (!o || blocks_[*o].rows.empty()) continue;
    opposite_[w] = *o;
    auto& g = gram_[w];
    g.assign(blocks_[w].rows.size(), std::vector<Integer>(blocks_[*o].rows.size()));
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g[a].size(); ++b) {
        g[a][b] = amb.pairing(basis_[block_begin_[w] + a], basis_[block_begin_[*o] + b]);
      }
    }
  }
}

std::shared_ptr<const LatticeModule> LatticeModule::generate(std::shared_ptr<const Ambient> ambient,
                                                             const LatticeLimits& limits) {
  std::shared_ptr<LatticeModule> m(new LatticeModule(std::move(ambient)));
  IntWedgeVector top;
  top.add(m->ambient_->highest_monomial(), 1);
  m->insert(top);
  m->close({top}, limits);
  m->finalize();
  return m;
}

std::shared_ptr<const LatticeModule> LatticeModule::from_rows(std::shared_ptr<const Ambient> ambient,
                                                              const std::vector<IntWedgeVector>& rows,
                                                              const LatticeLimits& limits, bool certify) {
  std::shared_ptr<LatticeModule> m(new LatticeModule(std::move(ambient)));
  for (const auto& r : rows) {
    for (const auto& [i, c] : r.terms()) {
      if (i >= m->ambient_->dimension()) throw InputError("stored row refers to a missing monomial");
    }
    m->insert(r);
  }
  if (certify) m->close(rows, limits);
  m->finalize();
  return m;
}

std::size_t LatticeModule::zero_weight_rank() const {
  const auto z = ambient_->find_weight(std::vector<int>(ambient_->weight_by_id(0).size(), 0));
  return z ? blocks_[*z].rows.size() : 0;
}

std::optional<LatticeCoords> LatticeModule::coordinates(const IntWedgeVector& v) const {
  std::map<std::size_t, IntWedgeVector> parts;
  for (const auto& [i, c] : v.terms()) parts[ambient_->weight_id(i)].add(i, c);
  LatticeCoords out;
  for (const auto& [w, part] : parts) {
    auto coeffs = solve_block(w, dense(part, w));
    if (!coeffs) return std::nullopt;
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
      if ((*coeffs)[i] != 0) out.emplace(block_begin_[w] + i, (*coeffs)[i]);
    }
  }
  return out;
}

std::optional<BitVector> LatticeModule::mod2_coordinates(const IntWedgeVector& v) const {
  std::map<std::size_t, IntWedgeVector> parts;
  for (const auto& [i, c] : v.terms()) {
    if (odd(c)) parts[ambient_->weight_id(i)].add(i, 1);
  }
  BitVector out(rank());
  for (const auto& [w, part] : parts) {
    const Block& b = blocks_[w];
    const std::size_t width = ambient_->weight_space(w).size();
    const std::size_t cols = width + b.rows.size();
    Echelon ech(cols);
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      BitVector row(cols);
      for (std::size_t c = 0; c < width; ++c) row.set(c, odd(b.rows[r][c]));
      row.set(width + r);
      ech.insert(std::move(row));
    }
    BitVector target(cols);
    for (const auto& [i, c] : part.terms()) target.set(local(i));
    ech.reduce(target);
    for (std::size_t c = 0; c < width; ++c) {
      if (target.get(c)) return std::nullopt;
    }
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      if (target.get(width + r)) out.set(block_begin_[w] + r);
    }
  }
  return out;
}

bool LatticeModule::saturated() const {
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    const Block& b = blocks_[w];
    const std::size_t width = ambient_->weight_space(w).size();
    std::vector<BitVector> rows;
    for (const auto& r : b.rows) {
      BitVector bv(width);
      for (std::size_t c = 0; c < width; ++c) bv.set(c, odd(r[c]));
      rows.push_back(std::move(bv));
    }
    if (invforms::rank(rows, width) != rows.size()) return false;
  }
  return true;
}

Integer LatticeModule::gram(std::size_t a, std::size_t b) const {
  const std::size_t wa = basis_weight_[a];
  if (opposite_[wa] != basis_weight_[b]) return 0;
  return gram_[wa][a - block_begin_[wa]][b - block_begin_[basis_weight_[b]]];
}

bool LatticeModule::gram_symmetric() const {
  for (std::size_t a = 0; a < rank(); ++a) {
    const auto o = opposite_[basis_weight_[a]];
    if (!o) continue;
    for (std::size_t j = 0; j < blocks_[*o].rows.size(); ++j) {
      const std::size_t b = block_begin_[*o] + j;
      if (gram(a, b) != gram(b, a)) return false;
    }
  }
  return true;
}

Integer LatticeModule::q_value(const LatticeCoords& x) const {
  Integer q = 0;
  for (const auto& [a, ca] : x) {
    const auto o = opposite_[basis_weight_[a]];
    if (!o) continue;
    auto lo = x.lower_bound(block_begin_[*o]);
    auto hi = x.lower_bound(block_begin_[*o] + blocks_[*o].rows.size());
    for (auto it = lo; it != hi; ++it) q += ca * it->second * gram(a, it->first);
  }
  return q;
}

Gf2Matrix LatticeModule::gram_mod2() const {
  Gf2Matrix g(rank(), rank());
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    if (!opposite_[w]) continue;
    const auto& blk = gram_[w];
    for (std::size_t a = 0; a < blk.size(); ++a) {
      for (std::size_t b = 0; b < blk[a].size(); ++b) {
        if (odd(blk[a][b])) g.set(block_begin_[w] + a, block_begin_[*opposite_[w]] + b);
      }
    }
  }
  return g;
}

std::vector<BitVector> LatticeModule::radical_mod2() const {
  std::vector<BitVector> out;
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    const std::size_t n = blocks_[w].rows.size();
    if (n == 0) continue;
    std::vector<BitVector> local_basis;
    if (!opposite_[w]) {
      for (std::size_t i = 0; i < n; ++i) {
        BitVector e(n);
        e.set(i);
        local_basis.push_back(std::move(e));
      }
    } else {
      const auto& blk = gram_[w];
      Gf2Matrix mt(blocks_[*opposite_[w]].rows.size(), n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < blk[a].size(); ++b) {
          if (odd(blk[a][b])) mt.set(b, a);
        }
      }
      local_basis = kernel(mt);
    }
    for (const auto& v : local_basis) {
      BitVector g(rank());
      for (std::size_t i : v.ones()) g.set(block_begin_[w] + i);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<BitVector> LatticeModule::operator_images_mod2(std::size_t root, int m) const {
  std::vector<BitVector> out;
  out.reserve(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    BitVector img(rank());
    const IntWedgeVector w = ambient_->apply(root, m, basis_[j]);
    const auto coords = coordinates(w);
    if (!coords) throw InternalError("lattice is not closed under " + ambient_->roots()[root].label);
    for (const auto& [i, c] : *coords) {
      if (odd(c)) img.set(i);
    }
    out.push_back(std::move(img));
  }
  return out;
}

std::shared_ptr<const LatticeModule> generate_weyl_lattice_C(int l, int k, const LatticeLimits& limits) {
  if (l < 2 || k < 1 || k > l) throw InputError("type C lattice needs 2 <= l and 1 <= k <= l");
  auto m = LatticeModule::generate(Ambient::symplectic(l, k, limits.ambient_cap), limits);
  if (m->rank() != expected_rank_C(l, k)) {
    throw InternalError("type C lattice rank " + std::to_string(m->rank()) + " differs from " +
                        expected_rank_C(l, k).str());
  }
  return m;
}

std::shared_ptr<const LatticeModule> generate_weyl_lattice_A(int n, int k, const LatticeLimits& limits) {
  if (k < 1 || k >= n - k) throw InputError("type A lattice needs 1 <= k < n - k");
  auto m = LatticeModule::generate(Ambient::sl_tensor(n, k, limits.ambient_cap), limits);
  if (m->rank() != expected_rank_A(n, k)) {
    throw InternalError("type A lattice rank " + std::to_string(m->rank()) + " differs from " +
                        expected_rank_A(n, k).str());
  }
  return m;
}

Integer expected_rank_C(int l, int k) { return binomial(2 * l, k) - binomial(2 * l, k - 2); }

Integer expected_rank_A(int n, int k) {
  std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
  c[k - 1] += 1;
  c[n - k - 1] += 1;
  return weyl_dim(SimpleType(Family::A, n - 1), Weight(c));
}

std::optional<int> gamma_shift(std::int64_t rank_plus_one, int i) {
  if (i < 0 || i > 40 || rank_plus_one < 1) return std::nullopt;
  const std::int64_t r = rank_plus_one % (std::int64_t{2} << i) - (std::int64_t{1} << i);
  if (r < 0) return std::nullopt;
  return static_cast<int>(r);
}

namespace {

void check_gamma(const char* what, std::int64_t param, int i, int t) {
  if (i < 0 || i > 20) throw InputError(std::string(what) + ": i out of range");
  const auto shift = gamma_shift(param + 1, i);
  if (!shift || *shift != t) {
    throw InputError(std::string(what) + ": need " + std::to_string(param) + " + 1 = 2^" + std::to_string(i) +
                     " + t mod 2^" + std::to_string(i + 1) + " with 0 <= t < 2^" + std::to_string(i));
  }
}

}  // namespace

void check_gamma_hypothesis_C(int l, int i, int t) {
  check_gamma("gamma (type C)", l, i, t);
  if (l < (2 << i)) throw InputError("gamma (type C): need l >= 2^(i+1)");
}

void check_gamma_hypothesis_A(int n, int i, int t) {
  check_gamma("gamma (type A)", n, i, t);
  if (n <= (2 << i)) throw InputError("gamma (type A): need n > 2^(i+1)");
}

IntWedgeVector gamma_vector_C(const Ambient& ambient, int i, int t) {
  if (ambient.kind() != AmbientKind::Symplectic) throw InputError("gamma_vector_C needs a symplectic ambient");
  check_gamma_hypothesis_C(ambient.param(), i, t);
  if (ambient.degree() != (2 << i)) throw InputError("gamma_vector_C: ambient degree must be 2^(i+1)");
  IntWedgeVector out;
  for_each_subset(ambient.param() - t, 1 << i, [&](const std::vector<int>& set) {
    std::vector<int> seq;
    for (int x : set) {
      seq.push_back(x);
      seq.push_back(-x);
    }
    const auto [idx, sign] = ambient.sp_monomial(seq);
    out.add(idx, sign);
  });
  return out;
}

IntWedgeVector gamma_vector_A(const Ambient& ambient, int i, int t) {
  if (ambient.kind() != AmbientKind::SlTensor) throw InputError("gamma_vector_A needs an SL ambient");
  check_gamma_hypothesis_A(ambient.param(), i, t);
  if (ambient.degree() != (1 << i)) throw InputError("gamma_vector_A: ambient degree must be 2^i");
  IntWedgeVector out;
  for_each_subset(ambient.param() - t, 1 << i, [&](const std::vector<int>& set) {
    const auto [idx, sign] = ambient.sl_monomial(set, set);
    out.add(idx, sign);
  });
  return out;
}

IntWedgeVector extremal_pair(const Ambient& ambient) {
  IntWedgeVector out;
  const std::size_t top = ambient.highest_monomial();
  out.add(top, 1);
  if (ambient.kind() == AmbientKind::Symplectic) {
    std::vector<int> seq;
    for (int i = 1; i <= ambient.degree(); ++i) seq.push_back(-i);
    const auto [idx, sign] = ambient.sp_monomial(seq);
    out.add(idx, sign);
  } else {
    out.add(ambient.partner(top).index, 1);
  }
  return out;
}

std::vector<IntWedgeVector> zero_weight_generators_C(const Ambient& ambient) {
  if (ambient.kind() != AmbientKind::Symplectic || ambient.degree() % 2 != 0) {
    throw InputError("zero_weight_generators_C needs wedge^k with k even");
  }
  const int s = ambient.degree() / 2;
  std::vector<IntWedgeVector> out;
  for_each_pairing(ambient.param(), s, [&](const std::vector<std::pair<int, int>>& pairs) {
    IntWedgeVector v;
    for (unsigned choice = 0; choice < (1U << s); ++choice) {
      std::vector<int> seq;
      int sign = 1;
      for (int r = 0; r < s; ++r) {
        // (y_hi - y_lo): bit set picks y_lo with a minus sign
        const bool low = (choice >> r) & 1U;
        const int f = low ? pairs[r].first : pairs[r].second;
        if (low) sign = -sign;
        seq.push_back(f);
        seq.push_back(-f);
      }
      const auto [idx, msign] = ambient.sp_monomial(seq);
      v.add(idx, sign * msign);
    }
    out.push_back(std::move(v));
  });
  return out;
}

std::vector<IntWedgeVector> zero_weight_generators_A(const Ambient& ambient) {
  if (ambient.kind() != AmbientKind::SlTensor) throw InputError("zero_weight_generators_A needs an SL ambient");
  const int k = ambient.degree();
  std::vector<IntWedgeVector> out;
  for_each_pairing(ambient.param(), k, [&](const std::vector<std::pair<int, int>>& pairs) {
    IntWedgeVector v;
    for (unsigned choice = 0; choice < (1U << k); ++choice) {
      std::vector<int> set;
      int sign = 1;
      for (int r = 0; r < k; ++r) {
        const bool high = (choice >> r) & 1U;
        set.push_back(high ? pairs[r].second : pairs[r].first);
        if (high) sign = -sign;
      }
      std::sort(set.begin(), set.end());
      const auto [idx, msign] = ambient.sl_monomial(set, set);
      v.add(idx, sign * msign);
    }
    out.push_back(std::move(v));
  });
  return out;
}

std::size_t fixed_space_dim(const Ambient& ambient) {
  if (ambient.kind() == AmbientKind::Symplectic && ambient.degree() % 2 != 0) {
    throw InputError("fixed_space_dim: wedge^k of odd degree has no zero weight");
  }
  const auto zero = ambient.find_weight(std::vector<int>(ambient.weight_by_id(0).size(), 0));
  if (!zero) throw InternalError("ambient has no zero weight space");
  const auto& space = ambient.weight_space(*zero);
  Echelon ech(space.size());
  for (std::size_t r = 0; r < ambient.roots().size(); ++r) {
    for (int m = 1; m <= ambient.max_power(r); ++m) {
      std::map<std::size_t, BitVector> rows;
      for (std::size_t c = 0; c < space.size(); ++c) {
        for (const auto& [idx, sign] : ambient.apply(r, m, space[c])) {
          if (sign % 2 == 0) continue;
          auto it = rows.try_emplace(idx, BitVector(space.size())).first;
          it->second.flip(c);
        }
      }
      for (auto& [idx, row] : rows) ech.insert(std::move(row));
    }
  }
  return space.size() - ech.rank();
}

bool q_half_eval(const LatticeModule& module, const BitVector& v) {
  const Ambient& amb = module.ambient();
  if (amb.kind() == AmbientKind::Symplectic && amb.degree() % 2 != 0) {
    throw InputError("q_half_eval needs an even exterior power");
  }
  if (v.size() != module.rank()) throw InputError("coordinate vector has the wrong length");
  LatticeCoords lift;
  for (std::size_t i : v.ones()) lift.emplace(i, 1);
  const Integer q = module.q_value(lift);
  if (odd(q)) throw InternalError("odd value of q on the Weyl lattice: " + q.str());
  return odd(q / 2);
}

}  // namespace invforms
