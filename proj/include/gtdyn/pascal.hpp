#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gtdyn/links.hpp"
#include "gtdyn/trajectory.hpp"

namespace gtdyn {

/// Parameters of the Example-A chain on {0,...,N}.
struct AbParams {
  double a, b;
  AbParams(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("AbParams: a, b must be positive");
  }
};

/// Link X_N -> X_{N-1} of the Pascal-triangle chain: from n, stay at n with
/// probability (N-n)/N, drop to n-1 with probability n/N. Exact rationals.
inline SparseKernel<std::int64_t, std::int64_t, BigRat> pascal_link(int N) {
  if (N < 2) throw std::invalid_argument("pascal_link: N must be >= 2");
  SparseKernel<std::int64_t, std::int64_t, BigRat> k;
  k.source_level = N;
  k.target_level = N - 1;
  for (std::int64_t n = 0; n <= N; ++n) {
    auto& row = k.rows[n];
    if (n < N) row.emplace_back(n, BigRat(N - n, N));
    if (n > 0) row.emplace_back(n - 1, BigRat(n, N));
  }
  return k;
}

inline double rate_6a_up(int N, const AbParams& ab, std::int64_t n) {
  return static_cast<double>(N - n) * (static_cast<double>(n) + ab.a);
}
inline double rate_6a_down(int N, const AbParams& ab, std::int64_t n) {
  return static_cast<double>(n) * (static_cast<double>(N) + ab.b - static_cast<double>(n));
}
inline double rate_6b_up(int N, double c, std::int64_t n) {
  return static_cast<double>(N - n) * c;
}
inline double rate_6b_down(int N, double c, std::int64_t n) {
  return static_cast<double>(n) * (1.0 - c);
}

/// (D_N F)(n) = (N-n)(n+a)[F(n+1)-F(n)] + n(N+b-n)[F(n-1)-F(n)].
/// The up rate vanishes at n = N and the down rate at n = 0, so the missing
/// endpoint values are never read.
inline double generator_6a(int N, const AbParams& ab, const std::map<std::int64_t, double>& F,
                           std::int64_t n) {
  if (n < 0 || n > N) throw std::out_of_range("generator_6a: n outside {0..N}");
  double f0 = F.at(n);
  double acc = 0.0;
  double ru = rate_6a_up(N, ab, n);
  if (ru > 0.0) acc += ru * (F.at(n + 1) - f0);
  double rd = rate_6a_down(N, ab, n);
  if (rd > 0.0) acc += rd * (F.at(n - 1) - f0);
  return acc;
}

/// (D'_N F)(n) = (N-n)c[F(n+1)-F(n)] + n(1-c)[F(n-1)-F(n)], c in [0,1].
inline double generator_6b(int N, double c, const std::map<std::int64_t, double>& F,
                           std::int64_t n) {
  if (n < 0 || n > N) throw std::out_of_range("generator_6b: n outside {0..N}");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("generator_6b: c must be in [0,1]");
  double f0 = F.at(n);
  double acc = 0.0;
  double ru = rate_6b_up(N, c, n);
  if (ru > 0.0) acc += ru * (F.at(n + 1) - f0);
  double rd = rate_6b_down(N, c, n);
  if (rd > 0.0) acc += rd * (F.at(n - 1) - f0);
  return acc;
}

/// Stationary law of the Example-A chain: the hypergeometric-type
/// distribution
///   M_N(n) = Gamma(a+b) N! / (Gamma(a) Gamma(b) Gamma(a+b+N))
///            * Gamma(a+n) Gamma(b+N-n) / (n! (N-n)!).
inline std::vector<double> hypergeometric_stationary(int N, const AbParams& ab) {
  double log_pref = std::lgamma(ab.a + ab.b) + std::lgamma(N + 1.0) - std::lgamma(ab.a) -
                    std::lgamma(ab.b) - std::lgamma(ab.a + ab.b + N);
  std::vector<double> m(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    double lg = std::lgamma(ab.a + n) + std::lgamma(ab.b + N - n) - std::lgamma(n + 1.0) -
                std::lgamma(N - n + 1.0);
    m[static_cast<std::size_t>(n)] = std::exp(log_pref + lg);
  }
  return m;
}

/// Binomial row Lambda^infty_N(x, n) = C(N,n) x^n (1-x)^(N-n).
inline std::vector<double> binomial_kernel(double x, int N) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("binomial_kernel: x must be in [0,1]");
  std::vector<double> row(static_cast<std::size_t>(N) + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    double log_binom = std::lgamma(N + 1.0) - std::lgamma(n + 1.0) - std::lgamma(N - n + 1.0);
    double p;
    if (x == 0.0)
      p = (n == 0) ? 1.0 : 0.0;
    else if (x == 1.0)
      p = (n == N) ? 1.0 : 0.0;
    else
      p = std::exp(log_binom + n * std::log(x) + (N - n) * std::log1p(-x));
    row[static_cast<std::size_t>(n)] = p;
  }
  return row;
}

/// Exact-rational binomial row, for the identities that hold exactly.
inline std::vector<BigRat> binomial_kernel_exact(const BigRat& x, int N) {
  if (x < 0 || x > 1) throw std::invalid_argument("binomial_kernel_exact: x must be in [0,1]");
  std::vector<BigRat> row(static_cast<std::size_t>(N) + 1);
  BigInt binom = 1;
  for (int n = 0; n <= N; ++n) {
    BigRat p = BigRat(binom);
    for (int k = 0; k < n; ++k) p *= x;
    for (int k = 0; k < N - n; ++k) p *= (BigRat(1) - x);
    row[static_cast<std::size_t>(n)] = p;
    binom = binom * (N - n) / (n + 1);
  }
  return row;
}

/// Exact-rational stationary law of the Example-B chain (binomial with
/// parameter c).
inline std::vector<BigRat> binomial_stationary_exact(const BigRat& c, int N) {
  return binomial_kernel_exact(c, N);
}

/// Deterministic limit flow of Example B: x(t) = c - (c - x0) e^{-t}.
inline double flow_6b(double c, double x0, double t) {
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("flow_6b: x0 must be in [0,1]");
  if (!(t >= 0.0)) throw std::invalid_argument("flow_6b: t must be nonnegative");
  return c - (c - x0) * std::exp(-t);
}

inline Trajectory<std::int64_t> simulate_6a(int N, const AbParams& ab, std::int64_t n0,
                                            double t_max, std::uint64_t seed,
                                            std::uint64_t event_cap = kDefaultEventCap) {
  if (n0 < 0 || n0 > N) throw std::invalid_argument("simulate_6a: n0 outside {0..N}");
  return simulate_birth_death([=](std::int64_t n) { return rate_6a_up(N, ab, n); },
                              [=](std::int64_t n) { return rate_6a_down(N, ab, n); }, n0, t_max,
                              seed, event_cap);
}

inline Trajectory<std::int64_t> simulate_6b(int N, double c, std::int64_t n0, double t_max,
                                            std::uint64_t seed,
                                            std::uint64_t event_cap = kDefaultEventCap) {
  if (n0 < 0 || n0 > N) throw std::invalid_argument("simulate_6b: n0 outside {0..N}");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("simulate_6b: c must be in [0,1]");
  return simulate_birth_death([=](std::int64_t n) { return rate_6b_up(N, c, n); },
                              [=](std::int64_t n) { return rate_6b_down(N, c, n); }, n0, t_max,
                              seed, event_cap);
}

}  // namespace gtdyn
