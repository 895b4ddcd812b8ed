#include "invforms/oracle.hpp"

#include "invforms/errors.hpp"
#include "invforms/lattice_cache.hpp"

namespace invforms {

OracleReport oracle_gram(const LatticeModule& module) {
  const Ambient& amb = module.ambient();
  if (amb.kind() == AmbientKind::Symplectic && amb.degree() % 2 != 0) {
    throw InputError("the Gram oracle needs an even exterior power");
  }
  const auto rad = module.radical_mod2();
  OracleReport out;
  out.dim_weyl = module.rank();
  out.dim_radical = rad.size();
  out.dim_irreducible = out.dim_weyl - out.dim_radical;
  // b vanishes on the radical, so Q is additive there.
  bool vanishes = true;
  for (const auto& v : rad) vanishes = vanishes && !q_half_eval(module, v);
  out.verdict = vanishes ? Verdict::Orthogonal : Verdict::SymplecticOnly;
  return out;
}

OracleReport oracle_gram_C(int l, int r, const LatticeLimits& limits) {
  if (r < 2 || r > l || r % 2 != 0) throw InputError("oracle_gram_C needs an even r with 2 <= r <= l");
  return oracle_gram(*LatticeCache::global().get({LatticeFamily::C, l, r}, limits));
}

namespace {

// The quotient L = V/rad with basis the non-pivot coordinates of rad's RREF.
class Quotient {
 public:
  explicit Quotient(const LatticeModule& module) : rad_(module.rank()) {
    for (auto& v : module.radical_mod2()) rad_.insert(std::move(v));
    std::vector<bool> pivot(module.rank(), false);
    for (std::size_t p : rad_.pivots()) pivot[p] = true;
    slot_.assign(module.rank(), BitVector::npos);
    for (std::size_t c = 0; c < module.rank(); ++c) {
      if (!pivot[c]) {
        slot_[c] = reps_.size();
        reps_.push_back(c);
      }
    }
  }

  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t radical_dim() const noexcept { return rad_.rank(); }
  std::size_t rep(std::size_t j) const { return reps_[j]; }

  BitVector project(BitVector v) const {
    rad_.reduce(v);
    BitVector out(dim());
    for (std::size_t c : v.ones()) {
      if (slot_[c] == BitVector::npos) throw InternalError("radical reduction left a pivot bit");
      out.set(slot_[c]);
    }
    return out;
  }

 private:
  Echelon rad_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> reps_;
};

bool form(const std::vector<BitVector>& b, const BitVector& x, const BitVector& y) {
  bool s = false;
  for (std::size_t i : x.ones()) s ^= b[i].dot(y);
  return s;
}

}  // namespace

OracleReport oracle_solver(const LatticeModule& module) {
  const Ambient& amb = module.ambient();
  const Quotient quo(module);
  const std::size_t n = quo.dim();
  const Gf2Matrix g = module.gram_mod2();

  std::vector<BitVector> b(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i].set(j, g.get(quo.rep(i), quo.rep(j)));
  }
  if (invforms::rank(b, n) != n) throw InternalError("induced form on V/rad is degenerate");
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].get(i)) throw InternalError("induced form is not alternating");
  }

  std::vector<std::size_t> roots = amb.positive_simple();
  roots.insert(roots.end(), amb.negative_simple().begin(), amb.negative_simple().end());

  // Unknowns q_j = Q(basis j); column n holds the constant term.
  Echelon system(n + 1);
  std::size_t equations = 0;
  auto q_const = [&](const BitVector& w) {
    const auto ones = w.ones();
    bool s = false;
    for (std::size_t a = 0; a < ones.size(); ++a) {
      for (std::size_t c = a + 1; c < ones.size(); ++c) s ^= b[ones[a]].get(ones[c]);
    }
    return s;
  };

  for (std::size_t r : roots) {
    const int top = amb.max_power(r);
    // images[m][j] = X^(m) applied to basis j of L, m = 0 the identity.
    std::vector<std::vector<BitVector>> images(static_cast<std::size_t>(top) + 1);
    for (std::size_t j = 0; j < n; ++j) {
      BitVector e(n);
      e.set(j);
      images[0].push_back(std::move(e));
    }
    for (int m = 1; m <= top; ++m) {
      const auto raw = module.operator_images_mod2(r, m);
      for (std::size_t j = 0; j < n; ++j) images[m].push_back(quo.project(raw[quo.rep(j)]));
    }

    for (int d = 1; d <= 2 * top; ++d) {
      // b(x(t)u, x(t)v) = b(u, v) coefficientwise.
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          bool s = false;
          for (int m = std::max(0, d - top); m <= std::min(d, top); ++m) {
            s ^= form(b, images[m][u], images[d - m][v]);
          }
          if (s) {
            throw InternalError("induced form is not invariant under " + amb.roots()[r].label);
          }
        }
      }
      // Q(x(t)v) = Q(v): t^d coefficient.
      for (std::size_t j = 0; j < n; ++j) {
        BitVector row(n + 1);
        bool c = false;
        if (d % 2 == 0 && d / 2 <= top) {
          const BitVector& w = images[d / 2][j];
          for (std::size_t x : w.ones()) row.set(x);
          c ^= q_const(w);
        }
        for (int m = std::max(0, d - top); 2 * m < d; ++m) c ^= form(b, images[m][j], images[d - m][j]);
        row.set(n, c);
        if (row.any()) {
          ++equations;
          system.insert(std::move(row));
        }
      }
    }
  }

  bool consistent = true;
  for (std::size_t p : system.pivots()) consistent = consistent && p != n;

  OracleReport out;
  out.dim_weyl = module.rank();
  out.dim_radical = quo.radical_dim();
  out.dim_irreducible = n;
  out.equations = equations;
  out.verdict = consistent ? Verdict::Orthogonal : Verdict::SymplecticOnly;
  return out;
}

OracleReport oracle_solver(FactorFamily family, int param, int k, const LatticeLimits& limits) {
  if (family == FactorFamily::CFundamental) {
    if (k < 1 || k > param) throw InputError("oracle_solver (type C) needs 1 <= k <= l");
    return oracle_solver(*LatticeCache::global().get({LatticeFamily::C, param, k}, limits));
  }
  if (k < 1 || k >= param - k) throw InputError("oracle_solver (type A) needs 1 <= k < n - k");
  return oracle_solver(*LatticeCache::global().get({LatticeFamily::A, param, k}, limits));
}

}  // namespace invforms
