#pragma once

// 100-digit reference values, written straight from the textbook definitions
// (no stable reformulations) so they share nothing with the library code.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

inline Big big(double v) { return Big(v); }

inline Big asinh(const Big& x) { return log(x + sqrt(x * x + 1)); }
inline Big atanh(const Big& x) { return log((1 + x) / (1 - x)) / 2; }

enum class Mean { H, G, L, P, A, M, T, Q, C };

inline Big mean(Mean m, const Big& a, const Big& b) {
  if (a == b) return a;
  const Big s = a + b;
  const Big d = a - b;
  switch (m) {
    case Mean::H: return 2 * a * b / s;
    case Mean::G: return sqrt(a * b);
    case Mean::L: return d / (log(a) - log(b));
    case Mean::P: return d / (2 * asin(d / s));
    case Mean::A: return s / 2;
    case Mean::M: return d / (2 * asinh(d / s));
    case Mean::T: return d / (2 * atan(d / s));
    case Mean::Q: return sqrt((a * a + b * b) / 2);
    case Mean::C: return (a * a + b * b) / s;
  }
  return Big(0);
}

inline Big mean(Mean m, double a, double b) { return mean(m, big(a), big(b)); }

/// Pair (1, (1-x)/(1+x)) realising the scaled variable x exactly.
inline Big partner(const Big& x) { return (1 - x) / (1 + x); }

/// (log Y - log M) / (log Y - log X) at scaled variable x.
inline Big ratio_R(Mean lower, Mean upper, const Big& x) {
  const Big b = partner(x);
  const Big lx = log(mean(lower, Big(1), b));
  const Big ly = log(mean(upper, Big(1), b));
  const Big lm = log(mean(Mean::M, Big(1), b));
  return (ly - lm) / (ly - lx);
}

inline Big phi(const Big& t) {
  const Big s = sinh(t);
  return (3 - cosh(2 * t)) * (sinh(2 * t) - 2 * t) / (2 * t * s * s * (5 + cosh(2 * t)));
}

inline Big g_quotient(const Big& t) {
  const Big s = sinh(t);
  return (3 - cosh(2 * t)) * (sinh(2 * t) - 2 * t) / (8 * t * s * s);
}

inline Big h_quotient(const Big& t) {
  const Big s = sinh(t);
  return (3 - cosh(2 * t)) * (sinh(2 * t) + t * cosh(2 * t) - 3 * t) / (16 * t * s * s);
}

/// Ratio functions in t: numerator / denominator built from log cosh t,
/// log(sinh t / t) and log(1 - sinh^2 t) with weights (wn, wd) on the second
/// and third logs.
inline Big ratio_in_t(const Big& t, int kind) {
  const Big lc = log(cosh(t));
  const Big ls = log(sinh(t) / t);
  const Big s = sinh(t);
  const Big l1 = log(1 - s * s);
  switch (kind) {
    case 0: return (lc - ls) / (lc - l1);          // f
    case 1: return (lc - ls) / (lc - l1 / 2);      // g
    default: return (lc - ls / 2) / (lc - l1 / 2);  // h
  }
}

inline Big tstar() { return log(1 + sqrt(Big(2))); }

/// p log(G/A) + (1-p) log(C/A) - log(M/A) from the means themselves.
inline Big varphi(const Big& x, const Big& p) {
  const Big b = partner(x);
  const Big la = log(mean(Mean::A, Big(1), b));
  return p * (log(mean(Mean::G, Big(1), b)) - la) + (1 - p) * (log(mean(Mean::C, Big(1), b)) - la) -
         (log(mean(Mean::M, Big(1), b)) - la);
}

inline Big lemma_f(const Big& x) {
  return x * (49 * x * x - 3) * sqrt(1 + x * x) + (3 + 7 * x * x + 20 * x * x * x * x) * asinh(x);
}

inline Big lemma_g(const Big& x) {
  return x * (1 + x * x) - (1 - x * x) * sqrt(1 + x * x) * asinh(x);
}

/// Generalized logarithmic mean, textbook forms.
inline Big log_mean_p(const Big& p, const Big& a, const Big& b) {
  if (p == 0) return exp((b * log(b) - a * log(a)) / (b - a) - 1);
  if (p == -1) return (b - a) / (log(b) - log(a));
  return pow((pow(b, p + 1) - pow(a, p + 1)) / ((p + 1) * (b - a)), 1 / p);
}

inline double rel(double got, const Big& want) {
  if (want == 0) return std::fabs(got);
  return static_cast<double>(abs((Big(got) - want) / want));
}

inline double to_double(const Big& v) { return static_cast<double>(v); }

}  // namespace oracle
