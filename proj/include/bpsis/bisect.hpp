#pragma once

#include <cmath>
#include <sstream>

#include "bpsis/errors.hpp"

namespace bpsis {

/// Root of a continuous function with a sign change on [lo, hi], by plain
/// bisection. Runs until the bracket is narrower than `tol` or stops
/// shrinking in floating point, so the result is reproducible bit for bit.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    std::ostringstream msg;
    msg << "bisection interval [" << lo << ", " << hi << "] does not bracket a root (f = " << f_lo
        << ", " << f_hi << ")";
    throw RootNotBracketed(msg.str());
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bpsis
