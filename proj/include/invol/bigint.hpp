#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace invol {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero outside the triangle.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace invol
