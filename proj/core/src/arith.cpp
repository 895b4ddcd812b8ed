#include "invforms/arith.hpp"

#include <bit>
#include <string>

#include "invforms/errors.hpp"

namespace invforms {

BaseExpansion::BaseExpansion(std::uint64_t v, int b) : value(v), base(b) {
  require_prime(b);
  for (std::uint64_t x = v; x > 0; x /= static_cast<std::uint64_t>(b)) {
    digits.push_back(static_cast<int>(x % static_cast<std::uint64_t>(b)));
  }
}

bool is_prime(std::int64_t p) noexcept {
  if (p == 2) return true;
  if (p < 2 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
}

bool contains_to_base_p(std::uint64_t a, std::uint64_t b, int p) {
  if (p == 2) return (a & b) == b;
  require_prime(p);
  const auto base = static_cast<std::uint64_t>(p);
  for (; b > 0; a /= base, b /= base) {
    auto bd = b % base;
    if (bd != 0 && bd != a % base) return false;
  }
  return true;
}

int nu_p(std::uint64_t a, int p) {
  if (a == 0) throw InputError("nu_p of 0 is undefined");
  if (p == 2) return std::countr_zero(a);
  require_prime(p);
  int d = 0;
  for (const auto base = static_cast<std::uint64_t>(p); a % base == 0; a /= base) ++d;
  return d;
}

int binom_nu_p(std::uint64_t x, std::uint64_t y, int p) {
  if (y > x) throw InputError("binom_nu_p needs y <= x");
  if (p != 2) require_prime(p);
  const auto base = static_cast<std::uint64_t>(p);
  std::uint64_t a = y;
  std::uint64_t b = x - y;
  int carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    std::uint64_t s = a % base + b % base + carry;
    carry = s >= base ? 1 : 0;
    carries += static_cast<int>(carry);
    a /= base;
    b /= base;
  }
  return carries;
}

bool binom_div4_criterion(std::int64_t l, int i, std::int64_t t) {
  if (i < 0 || i > 60) throw InputError("binom_div4_criterion: i out of range");
  const std::int64_t pi = std::int64_t{1} << i;
  if (t < 0 || t >= pi) throw InputError("binom_div4_criterion: need 0 <= t < 2^i");
  if (((l + 1) % (2 * pi) + 2 * pi) % (2 * pi) != pi + t) {
    throw InputError("binom_div4_criterion: l+1 is not 2^i + t mod 2^(i+1)");
  }
  if (l - t < pi) throw InputError("binom_div4_criterion: need l - t >= 2^i");
  return binom_nu_p(static_cast<std::uint64_t>(l - t), static_cast<std::uint64_t>(pi), 2) >= 2;
}

bool is_power_of_two(std::int64_t x) noexcept {
  return x > 0 && std::has_single_bit(static_cast<std::uint64_t>(x));
}

int exact_log2(std::int64_t x) noexcept {
  return std::countr_zero(static_cast<std::uint64_t>(x));
}

}  // namespace invforms
