#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flagloop {

using Int = boost::multiprecision::cpp_int;

inline Int abs_val(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_val(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_val(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

// Quotient minimizing |a - q*b|; keeps remainders in [-|b|/2, |b|/2] during
// elimination sweeps.
inline Int div_nearest(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0) {
    Int half = abs_val(b);
    if (2 * abs_val(r) > half) q += (r < 0) == (b < 0) ? 1 : -1;
  }
  return q;
}

}  // namespace flagloop
