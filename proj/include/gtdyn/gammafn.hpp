#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace gtdyn {

using cplx = std::complex<double>;

/// sin(pi*x) with argument reduction, accurate for large |x|.
inline double sinpi(double x) {
  double n = std::round(x);
  double r = x - n;  // |r| <= 0.5
  double s = std::sin(std::numbers::pi * r);
  return (static_cast<long long>(n) & 1) ? -s : s;
}

inline double cospi(double x) {
  double n = std::round(x);
  double r = x - n;
  double c = std::cos(std::numbers::pi * r);
  return (static_cast<long long>(n) & 1) ? -c : c;
}

/// sin(pi*z) for complex z, range-reduced in the real direction.
inline cplx sinpi(cplx z) {
  double x = z.real(), y = z.imag();
  if (y == 0.0) return {sinpi(x), 0.0};
  return {sinpi(x) * std::cosh(std::numbers::pi * y),
          cospi(x) * std::sinh(std::numbers::pi * y)};
}

namespace detail {

// Lanczos approximation, g = 7, 9 terms. Relative accuracy ~1e-13 on the
// right half-plane; reflection extends it to the left.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoef[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline cplx lanczos_log_gamma(cplx z) {
  // requires Re(z) >= 0.5
  z -= 1.0;
  cplx acc = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) acc += kLanczosCoef[i] / (z + static_cast<double>(i));
  cplx t = z + (kLanczosG + 0.5);
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

/// True when x is a pole of Gamma (a nonpositive integer).
inline bool is_gamma_pole(double x) {
  return x <= 0.0 && x == std::floor(x);
}

/// log Gamma for real arguments: log|Gamma(x)| plus i*pi when Gamma(x) < 0.
/// Throws std::domain_error at poles.
inline cplx log_gamma_real(double x) {
  if (is_gamma_pole(x)) throw std::domain_error("log_gamma: pole at nonpositive integer");
  double re = std::lgamma(x);
  // Gamma alternates sign between consecutive negative integers; it is
  // negative exactly when floor(x) is odd (x < 0).
  bool negative = x < 0.0 && (static_cast<long long>(std::floor(x)) & 1);
  return {re, negative ? std::numbers::pi : 0.0};
}

/// Complex log Gamma. The real part is log|Gamma(z)| to ~1e-13 relative;
/// the imaginary part is the argument of Gamma(z) up to a multiple of 2*pi
/// (the reflection branch is not tracked). Callers that need a real-valued
/// combination should sum real parts and validate the imaginary residue
/// modulo 2*pi.
inline cplx log_gamma(cplx z) {
  if (z.imag() == 0.0) return log_gamma_real(z.real());
  if (z.real() >= 0.5) return detail::lanczos_log_gamma(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  cplx s = sinpi(z);
  return std::log(cplx(std::numbers::pi)) - std::log(s) - detail::lanczos_log_gamma(1.0 - z);
}

/// Imaginary residue of a sum of log-gammas that should represent the log of
/// a positive real: distance of `im` from the nearest multiple of 2*pi.
inline double imag_residue_mod_2pi(double im) {
  return std::abs(std::remainder(im, 2.0 * std::numbers::pi));
}

}  // namespace gtdyn
