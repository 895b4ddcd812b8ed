#include "invforms/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "invforms/errors.hpp"

namespace invforms {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::A, "A"},   {Family::B, "B"},   {Family::C, "C"},
    {Family::D, "D"},   {Family::G2, "G2"}, {Family::F4, "F4"},
    {Family::E6, "E6"}, {Family::E7, "E7"}, {Family::E8, "E8"},
};

// Simple-root norms and Dynkin edges (0-based), Bourbaki labelling.
struct Diagram {
  std::vector<int> norms;
  std::vector<std::pair<int, int>> edges;
};

Diagram make_diagram(const SimpleType& t) {
  const int l = t.rank();
  Diagram d;
  d.norms.assign(static_cast<std::size_t>(l), 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family()) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l);
      d.norms[l - 1] = 1;
      break;
    case Family::C:
      chain(l);
      d.norms[l - 1] = 4;
      break;
    case Family::D:
      chain(l - 1);
      d.edges.emplace_back(l - 3, l - 1);
      break;
    case Family::G2:
      d.norms = {2, 6};
      d.edges = {{0, 1}};
      break;
    case Family::F4:
      d.norms = {4, 4, 2, 2};
      chain(4);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // 1-3-4-5-6(-7(-8)) with 2 hanging off 4.
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < l; ++i) d.edges.emplace_back(i, i + 1);
      break;
  }
  return d;
}

std::vector<int> make_w0(const SimpleType& t) {
  const int l = t.rank();
  std::vector<int> p(static_cast<std::size_t>(l));
  std::iota(p.begin(), p.end(), 0);
  switch (t.family()) {
    case Family::A:
      std::reverse(p.begin(), p.end());
      break;
    case Family::D:
      if (l % 2 == 1) std::swap(p[l - 2], p[l - 1]);
      break;
    case Family::E6:
      std::swap(p[0], p[5]);
      std::swap(p[2], p[4]);
      break;
    default:
      break;
  }
  return p;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (name == s) return fam;
  }
  throw InputError("unknown type family '" + std::string(s) + "'");
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  auto fail = [&](const char* need) {
    throw InputError("invalid rank " + std::to_string(rank) + " for type " +
                     std::string(to_string(family)) + " (" + need + ")");
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("need rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("need rank >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("need rank >= 4");
      break;
    case Family::G2:
      if (rank != 2) fail("rank is 2");
      break;
    case Family::F4:
      if (rank != 4) fail("rank is 4");
      break;
    case Family::E6:
      if (rank != 6) fail("rank is 6");
      break;
    case Family::E7:
      if (rank != 7) fail("rank is 7");
      break;
    case Family::E8:
      if (rank != 8) fail("rank is 8");
      break;
  }
}

bool SimpleType::is_classical() const noexcept {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
         family_ == Family::D;
}

std::string SimpleType::name() const {
  if (is_classical()) return std::string(to_string(family_)) + std::to_string(rank_);
  return std::string(to_string(family_));
}

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int c : coeffs_) {
    if (c < 0) throw InputError("weight coefficients must be non-negative");
  }
}

Weight::Weight(std::initializer_list<int> coeffs) : Weight(std::vector<int>(coeffs)) {}

Weight Weight::fundamental(int rank, int i) {
  if (i < 1 || i > rank) {
    throw InputError("fundamental weight index " + std::to_string(i) + " out of range");
  }
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return Weight(std::move(c));
}

Weight Weight::zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

bool Weight::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Weight::is_restricted(int p) const noexcept {
  if (p == 0) return true;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [p](int c) { return c < p; });
}

int Weight::fundamental_index() const noexcept {
  int index = 0;
  for (int i = 0; i < size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (coeffs_[i] != 1 || index != 0) return 0;
    index = i + 1;
  }
  return index;
}

Weight Weight::operator+(const Weight& other) const {
  if (other.size() != size()) throw InputError("weight length mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return Weight(std::move(c));
}

Weight Weight::scaled(int factor) const {
  if (factor < 0) throw InputError("negative scale factor");
  std::vector<int> c(coeffs_);
  for (int& x : c) x *= factor;
  return Weight(std::move(c));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

void validate_weight(const SimpleType& type, const Weight& weight) {
  if (weight.size() != type.rank()) {
    throw InputError("weight " + weight.to_string() + " has length " +
                     std::to_string(weight.size()) + " but " + type.name() + " has rank " +
                     std::to_string(type.rank()));
  }
}

RootDatum::RootDatum(const SimpleType& type) : type_(type) {
  const int l = type.rank();
  Diagram diagram = make_diagram(type);
  norms_ = diagram.norms;
  inner_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) inner_[i][i] = norms_[i];
  for (auto [i, j] : diagram.edges) {
    int v = -std::max(norms_[i], norms_[j]) / 2;
    inner_[i][j] = inner_[j][i] = v;
  }

  // Close the simple roots under simple reflections; every positive root is
  // reached because each one is s_i of a lower positive root.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> r(l, 0);
    r[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    std::vector<int> beta = std::move(queue.front());
    queue.pop_front();
    roots_.push_back(beta);
    for (int i = 0; i < l; ++i) {
      int ip = 0;
      for (int j = 0; j < l; ++j) ip += beta[j] * inner_[j][i];
      int n = 2 * ip / norms_[i];
      if (n == 0) continue;
      std::vector<int> image = beta;
      image[i] -= n;
      if (image[i] < 0) continue;  // only s_i(alpha_i) is negative
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::sort(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });

  pairing_.reserve(roots_.size());
  for (const auto& beta : roots_) {
    int norm = 0;
    for (int a = 0; a < l; ++a) {
      if (beta[a] == 0) continue;
      for (int b = 0; b < l; ++b) norm += beta[a] * beta[b] * inner_[a][b];
    }
    std::vector<int> row(l, 0);
    for (int i = 0; i < l; ++i) {
      int num = beta[i] * norms_[i];
      if (num % norm != 0) throw InternalError("non-integral coroot pairing");
      row[i] = num / norm;
    }
    pairing_.push_back(std::move(row));
  }
  if (roots_.size() != expected_positive_root_count(type)) {
    throw InternalError("positive root count mismatch for " + type.name());
  }
  w0_ = make_w0(type);
}

int RootDatum::cartan(int i, int j) const { return 2 * inner_[j][i] / norms_[i]; }

std::shared_ptr<const RootDatum> RootDatum::get(const SimpleType& type) {
  static std::mutex mutex;
  static std::map<std::pair<Family, int>, std::shared_ptr<const RootDatum>> cache;
  const auto key = std::make_pair(type.family(), type.rank());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto datum = std::make_shared<const RootDatum>(type);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(datum)).first->second;
}

std::size_t expected_positive_root_count(const SimpleType& type) {
  const std::size_t l = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
  }
  return 0;
}

Weight minus_w0(const RootDatum& datum, const Weight& weight) {
  validate_weight(datum.type(), weight);
  std::vector<int> out(static_cast<std::size_t>(weight.size()));
  const auto& perm = datum.w0_permutation();
  for (int i = 0; i < weight.size(); ++i) out[perm[i]] = weight.coeffs()[i];
  return Weight(std::move(out));
}

bool is_self_dual(const RootDatum& datum, const Weight& weight) {
  return minus_w0(datum, weight) == weight;
}

std::int64_t d_lambda(const RootDatum& datum, const Weight& weight) {
  validate_weight(datum.type(), weight);
  std::int64_t total = 0;
  for (const auto& row : datum.coroot_pairing()) {
    for (int i = 0; i < weight.size(); ++i) {
      total += static_cast<std::int64_t>(row[i]) * weight.coeffs()[i];
    }
  }
  return total;
}

std::string_view to_string(DParity p) {
  switch (p) {
    case DParity::Even: return "0";
    case DParity::Odd: return "1";
    case DParity::NotSelfDual: return "not-self-dual";
  }
  return "?";
}

DParity d_parity_closed_form(const SimpleType& type, const Weight& weight) {
  validate_weight(type, weight);
  const int l = type.rank();
  auto m = [&](int i) { return weight[i]; };
  auto parity = [](long v) { return v % 2 == 0 ? DParity::Even : DParity::Odd; };

  switch (type.family()) {
    case Family::A: {
      for (int i = 1; i <= l; ++i) {
        if (m(i) != m(l - i + 1)) return DParity::NotSelfDual;
      }
      if (l % 2 == 0) return DParity::Even;
      return parity(static_cast<long>((l + 1) / 2) * m((l + 1) / 2));
    }
    case Family::B:
      if (l % 4 == 0 || l % 4 == 3) return DParity::Even;
      return parity(m(l));
    case Family::C: {
      long s = 0;
      for (int i = 1; i <= l; i += 2) s += m(i);
      return parity(s);
    }
    case Family::D:
      if (l % 2 == 1 && m(l) != m(l - 1)) return DParity::NotSelfDual;
      if (l % 4 != 2) return DParity::Even;
      return parity(static_cast<long>(m(l)) + m(l - 1));
    case Family::G2:
    case Family::F4:
    case Family::E8:
      return DParity::Even;
    case Family::E6:
      if (m(1) != m(6) || m(3) != m(5)) return DParity::NotSelfDual;
      return DParity::Even;
    case Family::E7:
      return parity(static_cast<long>(m(2)) + m(5) + m(7));
  }
  return DParity::NotSelfDual;
}

std::vector<Weight> self_dual_generators(const SimpleType& type) {
  const int l = type.rank();
  std::vector<Weight> out;
  auto pair = [&](int i, int j) {
    Weight w = Weight::fundamental(l, i);
    return i == j ? w : w + Weight::fundamental(l, j);
  };
  switch (type.family()) {
    case Family::A:
      for (int i = 1; 2 * i <= l + 1; ++i) out.push_back(pair(i, l + 1 - i));
      break;
    case Family::D:
      if (l % 2 == 1) {
        for (int i = 1; i <= l - 2; ++i) out.push_back(Weight::fundamental(l, i));
        out.push_back(pair(l - 1, l));
        break;
      }
      [[fallthrough]];
    case Family::B:
    case Family::C:
    case Family::G2:
    case Family::F4:
    case Family::E7:
    case Family::E8:
      for (int i = 1; i <= l; ++i) out.push_back(Weight::fundamental(l, i));
      break;
    case Family::E6:
      out = {pair(1, 6), Weight::fundamental(6, 2), pair(3, 5), Weight::fundamental(6, 4)};
      break;
  }
  return out;
}

std::vector<DualityRow> duality_table() {
  return {
      {"A_l (l>=1)", "iff m_i = m_{l-i+1} for all i",
       "0 when l even; (l+1)/2 * m_{(l+1)/2} when l odd"},
      {"B_l (l>=2)", "always", "0 when l = 0,3 mod 4; m_l when l = 1,2 mod 4"},
      {"C_l (l>=2)", "always", "m_1 + m_3 + m_5 + ..."},
      {"D_l (l>=4)", "l even: always; l odd: iff m_l = m_{l-1}",
       "0 when l != 2 mod 4; m_l + m_{l-1} when l = 2 mod 4"},
      {"G2", "always", "0"},
      {"F4", "always", "0"},
      {"E6", "iff m_1 = m_6 and m_3 = m_5", "0"},
      {"E7", "always", "m_2 + m_5 + m_7"},
      {"E8", "always", "0"},
  };
}

}  // namespace invforms
