#pragma once

// Base-p digit combinatorics: containment, p-adic valuations and Kummer carry
// counts for binomial coefficients.

#include <cstdint>
#include <vector>

namespace invforms {

/// Digits of a non-negative integer in a prime base, least significant first.
struct BaseExpansion {
  std::uint64_t value = 0;
  int base = 2;
  std::vector<int> digits;

  BaseExpansion(std::uint64_t value, int base);

  /// Digit at position i, zero beyond the leading digit.
  int digit(std::size_t i) const noexcept { return i < digits.size() ? digits[i] : 0; }
};

bool is_prime(std::int64_t p) noexcept;
/// Throws InputError unless p is prime.
void require_prime(std::int64_t p);

/// a contains b to base p: every digit of b is 0 or the matching digit of a.
bool contains_to_base_p(std::uint64_t a, std::uint64_t b, int p);

/// Largest d with p^d dividing a (a >= 1).
int nu_p(std::uint64_t a, int p);

/// nu_p(C(x, y)) as the carry count of y + (x - y) in base p.
int binom_nu_p(std::uint64_t x, std::uint64_t y, int p);

/// True iff 4 divides C(l - t, 2^i), under the hypothesis
/// l + 1 = 2^i + t mod 2^{i+1}, 0 <= t < 2^i, l - t >= 2^i.
bool binom_div4_criterion(std::int64_t l, int i, std::int64_t t);

bool is_power_of_two(std::int64_t x) noexcept;
/// log2 of a power of two.
int exact_log2(std::int64_t x) noexcept;

}  // namespace invforms
