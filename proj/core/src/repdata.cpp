#include "invforms/repdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <tuple>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"

namespace invforms {

namespace {

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= p;
  return out;
}

// epsilon of the branching rules: 0 iff x = -p^d mod p^{d+1}.
int branch_epsilon(std::int64_t x, int d, int p) {
  if (p == 2) return 0;
  const std::int64_t pd = ipow(p, d);
  return x % (pd * p) == pd * p - pd ? 0 : 1;
}

void add_entry(std::vector<BranchEntry>& entries, FactorLabel label, int mult) {
  for (auto& e : entries) {
    if (e.label == label) {
      e.multiplicity += mult;
      return;
    }
  }
  entries.push_back({label, mult});
}

class DimMemo {
 public:
  using Key = std::tuple<int, int, int, int, int>;

  std::optional<Integer> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Integer& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Integer> values_;
};

DimMemo& memo() {
  static DimMemo instance;
  return instance;
}

}  // namespace

std::string FactorLabel::to_string(FactorFamily family) const {
  if (family == FactorFamily::CFundamental) return std::to_string(first);
  return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

bool CompFactorSet::contains(FactorLabel label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

CompFactorSet comp_factors_C(int l, int r, int p) {
  require_prime(p);
  if (l < 1 || r < 1 || r > l) throw InputError("comp_factors_C needs 1 <= r <= l");
  CompFactorSet out{FactorFamily::CFundamental, {}};
  for (int j = r; j >= 0; j -= 2) {
    if (contains_to_base_p(static_cast<std::uint64_t>(l + 1 - j),
                           static_cast<std::uint64_t>((r - j) / 2), p)) {
      out.labels.push_back({j, 0});
    }
  }
  return out;
}

CompFactorSet comp_factors_A(int n, int r, int s, int p) {
  require_prime(p);
  if (r < 1 || r >= s || s > n - 1) throw InputError("comp_factors_A needs 1 <= r < s <= n - 1");
  CompFactorSet out{FactorFamily::APair, {}};
  for (int k = 0; k <= std::min(n - s, r); ++k) {
    if (contains_to_base_p(static_cast<std::uint64_t>(s - r + 1 + 2 * k),
                           static_cast<std::uint64_t>(k), p)) {
      out.labels.push_back({r - k, s + k});
    }
  }
  return out;
}

BranchCharacter branch_C(int l, int r, int p) {
  require_prime(p);
  if (l < 3 || r < 1 || r > l) throw InputError("branch_C needs l >= 3 and 1 <= r <= l");
  const std::int64_t x = l + 1 - r;
  BranchCharacter out{FactorFamily::CFundamental, {}, nu_p(static_cast<std::uint64_t>(x), p), 0};
  out.epsilon = branch_epsilon(x, out.d_val, p);
  auto add = [&](std::int64_t j, int mult) {
    if (mult > 0 && j >= 0 && j <= l - 1) add_entry(out.entries, {static_cast<int>(j), 0}, mult);
  };
  add(r, 1);
  add(r - 1, 2);
  for (int k = 0; k < out.d_val && 2 * ipow(p, k) <= r; ++k) add(r - 2 * ipow(p, k), 2);
  if (out.epsilon && out.d_val < 62 && 2 * ipow(p, out.d_val) <= r) {
    add(r - 2 * ipow(p, out.d_val), 1);
  }
  return out;
}

BranchCharacter branch_A(int n, int r, int s, int p) {
  require_prime(p);
  if (n < 3 || r < 0 || s < 0 || r > n - s) throw InputError("branch_A needs n >= 3 and 0 <= r <= n - s");
  const std::int64_t x = n + 1 - (r + s);
  BranchCharacter out{FactorFamily::APair, {}, nu_p(static_cast<std::uint64_t>(x), p), 0};
  out.epsilon = branch_epsilon(x, out.d_val, p);
  auto add = [&](std::int64_t a, std::int64_t b, int mult) {
    if (mult > 0 && a >= 0 && b >= 0 && a + b <= n - 1) {
      add_entry(out.entries, {static_cast<int>(a), static_cast<int>(b)}, mult);
    }
  };
  add(r, s - 1, 1);
  add(r - 1, s, 1);
  add(r, s, 1);
  for (int k = 0; k < out.d_val && ipow(p, k) <= std::min(r, s); ++k) {
    add(r - ipow(p, k), s - ipow(p, k), 2);
  }
  if (out.epsilon && out.d_val < 62 && ipow(p, out.d_val) <= std::min(r, s)) {
    add(r - ipow(p, out.d_val), s - ipow(p, out.d_val), 1);
  }
  return out;
}

Integer weyl_dim(const SimpleType& type, const Weight& lambda) {
  validate_weight(type, lambda);
  auto datum = RootDatum::get(type);
  Integer num = 1;
  Integer den = 1;
  for (const auto& row : datum->coroot_pairing()) {
    long a = 0;
    long b = 0;
    for (int i = 0; i < lambda.size(); ++i) {
      a += static_cast<long>(lambda.coeffs()[i] + 1) * row[i];
      b += row[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw InternalError("non-integral Weyl dimension");
  return num / den;
}

Integer irr_dim_C(int l, int r, int p) {
  if (r == 0) return 1;
  const DimMemo::Key key{0, l, r, 0, p};
  if (auto hit = memo().find(key)) return *hit;
  Integer dim = binomial(2 * l, r) - binomial(2 * l, r - 2);
  for (const auto& label : comp_factors_C(l, r, p).labels) {
    if (label.first != r) dim -= irr_dim_C(l, label.first, p);
  }
  memo().insert(key, dim);
  return dim;
}

Integer irr_dim_A(int n, int a, int b, int p) {
  if (n < 2 || a < 0 || b < 0 || a > n || b > n) throw InputError("irr_dim_A label out of range");
  // omega_0 = omega_n = 0.
  if (a == n) a = 0;
  if (b == n) b = 0;
  if (a > b) std::swap(a, b);
  if (a == 0) return binomial(n, b);
  if (a == b) {
    // L(2 omega_a) is the Frobenius twist of L(omega_a) in characteristic 2.
    if (p != 2) throw InputError("irr_dim_A: L(2 omega_a) is only covered in characteristic 2");
    return binomial(n, a);
  }
  const DimMemo::Key key{1, n, a, b, p};
  if (auto hit = memo().find(key)) return *hit;
  Integer dim = weyl_dim(SimpleType(Family::A, n - 1),
                         Weight::fundamental(n - 1, a) + Weight::fundamental(n - 1, b));
  for (const auto& label : comp_factors_A(n, a, b, p).labels) {
    if (label.first != a) dim -= irr_dim_A(n, label.first, label.second, p);
  }
  memo().insert(key, dim);
  return dim;
}

Integer irr_dim(FactorFamily family, int rank_param, FactorLabel label, int p) {
  if (family == FactorFamily::CFundamental) return irr_dim_C(rank_param, label.first, p);
  return irr_dim_A(rank_param, label.first, label.second, p);
}

Integer pi_dim(int n, int x, int y, int p) {
  if (x < 0 || y < 0 || x + y > n) return 0;
  return irr_dim_A(n, x, n - y, p);
}

std::vector<int> dominant_conjugate(const RootDatum& datum, std::vector<int> mu) {
  const int l = datum.rank();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i) {
      if (mu[i] >= 0) continue;
      const int a = mu[i];
      for (int j = 0; j < l; ++j) mu[j] -= a * datum.cartan(j, i);
      changed = true;
    }
  }
  return mu;
}

std::map<Weight, std::int64_t> dominant_multiplicities(const SimpleType& type,
                                                       const Weight& lambda) {
  validate_weight(type, lambda);
  auto datum = RootDatum::get(type);
  const int l = type.rank();
  const auto& norms = datum->simple_root_norms();
  const auto& roots = datum->positive_roots();

  // Positive roots in fundamental coordinates.
  std::vector<std::vector<int>> root_fund;
  for (const auto& c : roots) {
    std::vector<int> f(l, 0);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) f[i] += c[j] * datum->cartan(i, j);
    }
    root_fund.push_back(std::move(f));
  }

  // Dominant weights below lambda, each with lambda - mu in simple-root
  // coordinates.
  struct Node {
    std::vector<int> mu;
    std::vector<int> depth;
  };
  std::vector<Node> nodes{{lambda.coeffs(), std::vector<int>(l, 0)}};
  std::set<std::vector<int>> seen{lambda.coeffs()};
  for (std::size_t at = 0; at < nodes.size(); ++at) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      std::vector<int> nu = nodes[at].mu;
      bool dominant = true;
      for (int i = 0; i < l; ++i) {
        nu[i] -= root_fund[b][i];
        dominant = dominant && nu[i] >= 0;
      }
      if (!dominant || !seen.insert(nu).second) continue;
      std::vector<int> depth = nodes[at].depth;
      for (int i = 0; i < l; ++i) depth[i] += roots[b][i];
      nodes.push_back({std::move(nu), std::move(depth)});
    }
  }
  auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](const Node& a, const Node& b) { return height(a.depth) < height(b.depth); });

  std::map<std::vector<int>, std::int64_t> mult;
  for (const auto& node : nodes) {
    if (mult.empty()) {
      mult[node.mu] = 1;
      continue;
    }
    // 2 (lambda+rho, lambda+rho) - 2 (mu+rho, mu+rho) = sum depth_j (lambda+mu+2rho)_j |alpha_j|^2.
    std::int64_t den2 = 0;
    for (int j = 0; j < l; ++j) {
      den2 += static_cast<std::int64_t>(node.depth[j]) *
              (lambda.coeffs()[j] + node.mu[j] + 2) * norms[j];
    }
    std::int64_t num2 = 0;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      std::vector<int> nu = node.mu;
      std::vector<int> depth = node.depth;
      for (int k = 1;; ++k) {
        bool below = true;
        for (int i = 0; i < l; ++i) {
          nu[i] += root_fund[b][i];
          depth[i] -= roots[b][i];
          below = below && depth[i] >= 0;
        }
        if (!below) break;
        auto it = mult.find(dominant_conjugate(*datum, nu));
        if (it == mult.end()) continue;
        std::int64_t ip2 = 0;  // 2 (nu, beta)
        for (int j = 0; j < l; ++j) ip2 += static_cast<std::int64_t>(roots[b][j]) * nu[j] * norms[j];
        num2 += it->second * ip2;
      }
    }
    if (den2 <= 0 || (2 * num2) % den2 != 0) throw InternalError("Freudenthal recursion failed");
    mult[node.mu] = 2 * num2 / den2;
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [mu, m] : mult) {
    if (m != 0) out.emplace(Weight(mu), m);
  }
  return out;
}

}  // namespace invforms
