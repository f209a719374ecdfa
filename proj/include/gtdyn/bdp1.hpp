#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "gtdyn/gammafn.hpp"
#include "gtdyn/params.hpp"
#include "gtdyn/trajectory.hpp"

namespace gtdyn {

namespace detail {

inline constexpr double kRateImagTol = 1e-10;
inline constexpr double kWeightImagTol = 1e-10;

/// Real value of a product of two linear factors that admissibility
/// guarantees to be real and positive.
inline double positive_real_rate(cplx value, const char* what) {
  if (std::abs(value.imag()) > kRateImagTol)
    throw std::domain_error(std::string(what) + ": nonreal rate, parameters are invalid");
  double r = value.real();
  if (!(r > 0.0)) throw std::domain_error(std::string(what) + ": nonpositive rate");
  return r;
}

}  // namespace detail

/// Unnormalized one-particle log-weight
///   -[log G(u+1-l) + log G(u'+1-l) + log G(v+1+l) + log G(v'+1+l)],
/// evaluated through the complex log-gamma. For an admissible quadruple the
/// four terms combine to the log of a positive real; the imaginary residue is
/// validated modulo 2*pi.
inline double one_particle_log_weight(const UvParams& uv, std::int64_t l) {
  double ld = static_cast<double>(l);
  cplx total = log_gamma(uv.u() + (1.0 - ld)) + log_gamma(uv.u_prime() + (1.0 - ld)) +
               log_gamma(uv.v() + (1.0 + ld)) + log_gamma(uv.v_prime() + (1.0 + ld));
  if (imag_residue_mod_2pi(total.imag()) > detail::kWeightImagTol)
    throw std::domain_error("one_particle_log_weight: weight is not real");
  return -total.real();
}

/// Right-hand side of Dougall's bilateral sum:
///   Gamma(u+u'+v+v'+1) / [Gamma(u+v+1) Gamma(u+v'+1) Gamma(u'+v+1) Gamma(u'+v'+1)].
/// Requires u+u'+v+v' > -1. This closed form normalizes the one-particle
/// measure.
inline double dougall_rhs(const UvParams& uv) {
  if (!(uv.sum_real > -1.0)) throw std::domain_error("dougall_rhs: requires u+u'+v+v' > -1");
  cplx lg = log_gamma(cplx(uv.sum_real + 1.0)) - log_gamma(uv.u() + uv.v() + 1.0) -
            log_gamma(uv.u() + uv.v_prime() + 1.0) - log_gamma(uv.u_prime() + uv.v() + 1.0) -
            log_gamma(uv.u_prime() + uv.v_prime() + 1.0);
  return std::exp(lg.real());
}

/// The bilateral birth-death chain on Z with quadratic jump rates
/// a+(l) = (u-l)(u'-l), a-(l) = (v+l)(v'+l).
class Bdp1Chain {
 public:
  explicit Bdp1Chain(UvParams uv) : uv_(std::move(uv)) {}

  const UvParams& params() const { return uv_; }

  double rate_up(std::int64_t l) const {
    double ld = static_cast<double>(l);
    return detail::positive_real_rate((uv_.u() - ld) * (uv_.u_prime() - ld), "rate_up");
  }

  double rate_down(std::int64_t l) const {
    double ld = static_cast<double>(l);
    return detail::positive_real_rate((uv_.v() + ld) * (uv_.v_prime() + ld), "rate_down");
  }

  /// DF(l) = a+(l)(F(l+1)-F(l)) + a-(l)(F(l-1)-F(l)).
  /// Throws std::out_of_range when F lacks a needed point.
  double generator_apply(const std::map<std::int64_t, double>& F, std::int64_t l) const {
    double f0 = F.at(l);
    return rate_up(l) * (F.at(l + 1) - f0) + rate_down(l) * (F.at(l - 1) - f0);
  }

  double log_weight(std::int64_t l) const { return one_particle_log_weight(uv_, l); }

  /// Probability mass M(l) = weight(l) / dougall_rhs on [lo, hi]; the
  /// normalization uses the closed form, so the window only bounds the
  /// reported support and the window mass is <= 1.
  std::map<std::int64_t, double> stationary_distribution(std::int64_t lo, std::int64_t hi) const {
    if (!measure_finite(uv_, 1))
      throw std::domain_error("stationary_distribution: measure is not finite");
    double log_norm = std::log(dougall_rhs(uv_));
    std::map<std::int64_t, double> m;
    for (std::int64_t l = lo; l <= hi; ++l) m[l] = std::exp(log_weight(l) - log_norm);
    return m;
  }

  Trajectory<std::int64_t> simulate(std::int64_t l0, double t_max, std::uint64_t seed,
                                    std::uint64_t event_cap = kDefaultEventCap) const {
    return simulate_birth_death([this](std::int64_t l) { return rate_up(l); },
                                [this](std::int64_t l) { return rate_down(l); }, l0, t_max, seed,
                                event_cap);
  }

 private:
  UvParams uv_;
};

}  // namespace gtdyn
