#pragma once

// 113-bit binary floating point backing cross-checks that need headroom
// beyond double.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace nsmean::detail {

using Extended = boost::multiprecision::cpp_bin_float_quad;

template <typename Real>
Real phi_direct(const Real& t) {
  using std::cosh;
  using std::sinh;
  const Real s = sinh(t);
  const Real c2 = cosh(2 * t);
  return (3 - c2) * (sinh(2 * t) - 2 * t) / (2 * t * s * s * (5 + c2));
}

}  // namespace nsmean::detail
