#include "invforms/wedge.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <bit>
#include <sstream>

#include "invforms/errors.hpp"

namespace invforms {

namespace {

std::vector<int> bit_positions(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// All masks with `count` bits below bit `width`, increasing.
std::vector<std::uint64_t> subsets(int width, int count) {
  std::vector<std::uint64_t> out;
  if (count == 0) return {0};
  if (count > width) return out;
  std::uint64_t v = (std::uint64_t{1} << count) - 1;
  const std::uint64_t limit = std::uint64_t{1} << width;
  while (v < limit) {
    out.push_back(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace

int sort_sign(std::vector<int> seq) {
  int parity = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

void IntWedgeVector::add(std::size_t index, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer IntWedgeVector::coeff(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Integer(0) : it->second;
}

IntWedgeVector& IntWedgeVector::operator+=(const IntWedgeVector& other) {
  for (const auto& [i, c] : other.terms_) add(i, c);
  return *this;
}

IntWedgeVector IntWedgeVector::operator-() const { return scaled(-1); }

IntWedgeVector IntWedgeVector::scaled(const Integer& c) const {
  IntWedgeVector out;
  if (c == 0) return out;
  for (const auto& [i, v] : terms_) out.terms_.emplace(i, v * c);
  return out;
}

std::shared_ptr<const Ambient> Ambient::symplectic(int l, int k, std::size_t cap) {
  if (l < 1 || l > 31 || k < 1 || k > l) throw InputError("symplectic wedge needs 1 <= k <= l <= 31");
  const Integer dim = binomial(2 * l, k);
  if (dim > cap) {
    throw ResourceError("ambient dimension C(" + std::to_string(2 * l) + "," + std::to_string(k) +
                        ") = " + dim.str() + " exceeds cap " + std::to_string(cap));
  }
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::Symplectic;
  a->param_ = l;
  a->k_ = k;
  a->positions_ = 2 * l;
  for (int p = 0; p < 2 * l; ++p) {
    std::vector<int> w(l, 0);
    const int s = p < l ? p - l : p - l + 1;
    w[std::abs(s) - 1] = s > 0 ? 1 : -1;
    a->position_weight_.push_back(std::move(w));
  }
  a->enumerate(cap);

  auto pos = [l](int s) { return s < 0 ? l + s : l + s - 1; };
  auto make = [&](std::vector<int> root, std::string label,
                  std::initializer_list<std::array<int, 3>> moves) {
    RootOperator op;
    op.root = std::move(root);
    op.label = std::move(label);
    op.target.assign(2 * l, -1);
    op.sign.assign(2 * l, 0);
    for (const auto& [from, to, sg] : moves) {
      op.sources |= std::uint64_t{1} << pos(from);
      op.target[pos(from)] = pos(to);
      op.sign[pos(from)] = sg;
    }
    a->roots_.push_back(std::move(op));
  };
  auto eps = [l](int i, int ci, int j = 0, int cj = 0) {
    std::vector<int> r(l, 0);
    r[i - 1] += ci;
    if (j) r[j - 1] += cj;
    return r;
  };
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      if (i == j) continue;
      // E_{i,j} - E_{-j,-i}
      make(eps(i, 1, j, -1), "e" + std::to_string(i) + "-e" + std::to_string(j),
           {{{j, i, 1}}, {{-i, -j, -1}}});
    }
  }
  for (int i = 1; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      const std::string ij = std::to_string(i) + "+e" + std::to_string(j);
      // E_{j,-i} + E_{i,-j} and E_{-j,i} + E_{-i,j}
      make(eps(i, 1, j, 1), "e" + ij, {{{-i, j, 1}}, {{-j, i, 1}}});
      make(eps(i, -1, j, -1), "-(e" + ij + ")", {{{i, -j, 1}}, {{j, -i, 1}}});
    }
    make(eps(i, 2), "2e" + std::to_string(i), {{{-i, i, 1}}});
    make(eps(i, -2), "-2e" + std::to_string(i), {{{i, -i, 1}}});
  }
  a->highest_ = *a->index_of(((std::uint64_t{1} << k) - 1) << l);
  a->finish();

  auto find_root = [&](const std::vector<int>& r) {
    for (std::size_t i = 0; i < a->roots_.size(); ++i) {
      if (a->roots_[i].root == r) return i;
    }
    throw InternalError("missing root");
  };
  for (int i = 1; i <= l; ++i) {
    std::vector<int> r = i < l ? eps(i, 1, i + 1, -1) : eps(l, 2);
    a->pos_simple_.push_back(find_root(r));
    for (int& x : r) x = -x;
    a->neg_simple_.push_back(find_root(r));
  }

  for (std::size_t i = 0; i < a->dimension(); ++i) {
    std::uint64_t mask = a->monomials_[i];
    std::uint64_t mirror = 0;
    int negatives = 0;
    for (int p : bit_positions(mask)) {
      mirror |= std::uint64_t{1} << (2 * l - 1 - p);
      negatives += p < l ? 1 : 0;
    }
    const int sign = ((k * (k - 1) / 2 + negatives) % 2) ? -1 : 1;
    a->partner_.push_back({*a->index_of(mirror), sign});
  }
  return a;
}

std::shared_ptr<const Ambient> Ambient::sl_tensor(int n, int k, std::size_t cap) {
  if (n < 2 || n > 31 || k < 1 || k >= n) throw InputError("sl tensor needs 1 <= k < n <= 31");
  const Integer dim = binomial(n, k) * binomial(n, k);
  if (dim > cap) {
    throw ResourceError("ambient dimension C(" + std::to_string(n) + "," + std::to_string(k) +
                        ")^2 = " + dim.str() + " exceeds cap " + std::to_string(cap));
  }
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::SlTensor;
  a->param_ = n;
  a->k_ = k;
  a->positions_ = 2 * n;
  for (int p = 0; p < 2 * n; ++p) {
    std::vector<int> w(n, 0);
    w[p % n] = p < n ? 1 : -1;
    a->position_weight_.push_back(std::move(w));
  }
  a->enumerate(cap);

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      RootOperator op;
      op.root.assign(n, 0);
      op.root[i - 1] = 1;
      op.root[j - 1] = -1;
      op.label = "e" + std::to_string(i) + "-e" + std::to_string(j);
      op.target.assign(2 * n, -1);
      op.sign.assign(2 * n, 0);
      // E_{i,j}: e_j -> e_i on V and e_i* -> -e_j* on V*.
      op.sources = (std::uint64_t{1} << (j - 1)) | (std::uint64_t{1} << (n + i - 1));
      op.target[j - 1] = i - 1;
      op.sign[j - 1] = 1;
      op.target[n + i - 1] = n + j - 1;
      op.sign[n + i - 1] = -1;
      a->roots_.push_back(std::move(op));
    }
  }
  const std::uint64_t low = (std::uint64_t{1} << k) - 1;
  const std::uint64_t high = low << (n - k);
  a->highest_ = *a->index_of(low | (high << n));
  a->finish();

  for (int i = 1; i < n; ++i) {
    for (std::size_t r = 0; r < a->roots_.size(); ++r) {
      const auto& root = a->roots_[r].root;
      if (root[i - 1] == 1 && root[i] == -1) a->pos_simple_.push_back(r);
      if (root[i - 1] == -1 && root[i] == 1) a->neg_simple_.push_back(r);
    }
  }

  const std::uint64_t half = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < a->dimension(); ++i) {
    const std::uint64_t mask = a->monomials_[i];
    const std::uint64_t swapped = ((mask & half) << n) | (mask >> n);
    a->partner_.push_back({*a->index_of(swapped), 1});
  }
  return a;
}

void Ambient::enumerate(std::size_t cap) {
  if (kind_ == AmbientKind::Symplectic) {
    monomials_ = subsets(positions_, k_);
  } else {
    const int n = param_;
    const auto parts = subsets(n, k_);
    for (auto v : parts) {
      for (auto d : parts) monomials_.push_back(v | (d << n));
    }
    std::sort(monomials_.begin(), monomials_.end());
  }
  if (monomials_.size() > cap) throw ResourceError("ambient dimension exceeds cap");
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    index_.emplace(monomials_[i], i);
    std::vector<int> w(position_weight_[0].size(), 0);
    for (int p : bit_positions(monomials_[i])) {
      for (std::size_t c = 0; c < w.size(); ++c) w[c] += position_weight_[p][c];
    }
    auto [it, inserted] = weight_lookup_.try_emplace(w, weights_.size());
    if (inserted) {
      weights_.push_back(w);
      spaces_.emplace_back();
    }
    weight_id_.push_back(it->second);
    spaces_[it->second].push_back(i);
  }
}

void Ambient::finish() {
  // Slot expansion of divided powers needs X_alpha^2 = 0 on V and V*.
  for (const auto& op : roots_) {
    for (int p : bit_positions(op.sources)) {
      if ((op.sources >> op.target[p]) & 1U) {
        throw InternalError("root vector " + op.label + " does not square to zero");
      }
    }
  }
}

std::optional<std::size_t> Ambient::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Ambient::find_weight(const std::vector<int>& w) const {
  auto it = weight_lookup_.find(w);
  if (it == weight_lookup_.end()) return std::nullopt;
  return it->second;
}

int Ambient::max_power(std::size_t root) const {
  return std::min(std::popcount(roots_[root].sources), kind_ == AmbientKind::Symplectic ? k_ : 2 * k_);
}

std::vector<SignedIndex> Ambient::apply(std::size_t root, int m, std::size_t monomial) const {
  const RootOperator& op = roots_[root];
  const std::uint64_t mask = monomials_[monomial];
  const std::uint64_t active = mask & op.sources;
  std::vector<SignedIndex> out;
  if (m < 1 || std::popcount(active) < m) return out;
  const auto active_pos = bit_positions(active);
  const auto slots = bit_positions(mask);
  for (std::uint64_t pick : subsets(static_cast<int>(active_pos.size()), m)) {
    std::uint64_t chosen = 0;
    for (int b : bit_positions(pick)) chosen |= std::uint64_t{1} << active_pos[b];
    std::uint64_t result = mask & ~chosen;
    int sign = 1;
    bool collision = false;
    for (int p : bit_positions(chosen)) {
      const std::uint64_t bit = std::uint64_t{1} << op.target[p];
      if (result & bit) {
        collision = true;
        break;
      }
      result |= bit;
      sign *= op.sign[p];
    }
    if (collision) continue;
    std::vector<int> seq;
    seq.reserve(slots.size());
    for (int p : slots) seq.push_back(((chosen >> p) & 1U) ? op.target[p] : p);
    sign *= sort_sign(std::move(seq));
    const std::size_t idx = index_.at(result);
    auto it = std::find_if(out.begin(), out.end(), [&](const SignedIndex& s) { return s.index == idx; });
    if (it == out.end()) {
      out.push_back({idx, sign});
    } else {
      it->sign += sign;
    }
  }
  std::erase_if(out, [](const SignedIndex& s) { return s.sign == 0; });
  return out;
}

IntWedgeVector Ambient::apply(std::size_t root, int m, const IntWedgeVector& v) const {
  IntWedgeVector out;
  for (const auto& [i, c] : v.terms()) {
    for (const auto& [j, s] : apply(root, m, i)) out.add(j, Integer(c * s));
  }
  return out;
}

Integer Ambient::pairing(const IntWedgeVector& a, const IntWedgeVector& b) const {
  Integer total = 0;
  for (const auto& [i, c] : a.terms()) {
    const auto [j, s] = partner_[i];
    auto it = b.terms().find(j);
    if (it != b.terms().end()) total += Integer(c * it->second) * s;
  }
  return total;
}

SignedIndex Ambient::sp_monomial(const std::vector<int>& signed_indices) const {
  if (kind_ != AmbientKind::Symplectic) throw InternalError("sp_monomial on a non-symplectic ambient");
  const int l = param_;
  std::vector<int> seq;
  std::uint64_t mask = 0;
  for (int s : signed_indices) {
    if (s == 0 || std::abs(s) > l) throw InputError("signed index out of range");
    const int p = s < 0 ? l + s : l + s - 1;
    if ((mask >> p) & 1U) return {0, 0};
    mask |= std::uint64_t{1} << p;
    seq.push_back(p);
  }
  auto idx = index_of(mask);
  if (!idx) throw InputError("monomial has the wrong degree");
  return {*idx, sort_sign(std::move(seq))};
}

SignedIndex Ambient::sl_monomial(const std::vector<int>& v_indices,
                                 const std::vector<int>& dual_indices) const {
  if (kind_ != AmbientKind::SlTensor) throw InternalError("sl_monomial on a non-SL ambient");
  const int n = param_;
  std::vector<int> seq;
  std::uint64_t mask = 0;
  auto take = [&](int p) {
    if ((mask >> p) & 1U) return false;
    mask |= std::uint64_t{1} << p;
    seq.push_back(p);
    return true;
  };
  for (int i : v_indices) {
    if (i < 1 || i > n) throw InputError("index out of range");
    if (!take(i - 1)) return {0, 0};
  }
  for (int i : dual_indices) {
    if (i < 1 || i > n) throw InputError("index out of range");
    if (!take(n + i - 1)) return {0, 0};
  }
  auto idx = index_of(mask);
  if (!idx) throw InputError("monomial has the wrong degree");
  return {*idx, sort_sign(std::move(seq))};
}

std::string Ambient::describe(std::size_t i) const {
  std::ostringstream os;
  const auto ps = bit_positions(monomials_[i]);
  if (kind_ == AmbientKind::Symplectic) {
    const int l = param_;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      const int s = ps[a] < l ? ps[a] - l : ps[a] - l + 1;
      os << (a ? "^" : "") << "e" << s;
    }
    return os.str();
  }
  const int n = param_;
  bool first = true;
  bool dual_started = false;
  for (int p : ps) {
    if (p >= n && !dual_started) {
      os << " (x) ";
      dual_started = true;
      first = true;
    }
    os << (first ? "" : "^") << "e" << (p % n) + 1 << (p >= n ? "*" : "");
    first = false;
  }
  return os.str();
}

}  // namespace invforms
