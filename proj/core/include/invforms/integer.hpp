#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace invforms {

using Integer = boost::multiprecision::cpp_int;

/// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline bool odd(const Integer& x) { return bit_test(x, 0); }

}  // namespace invforms
