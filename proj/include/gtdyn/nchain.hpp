#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "gtdyn/bdp1.hpp"
#include "gtdyn/omega.hpp"
#include "gtdyn/params.hpp"
#include "gtdyn/trajectory.hpp"

namespace gtdyn {

enum class JumpDir { up, down };

/// Eigenvalue constant of the Doob transform:
///   C_N = N(N-1)/2 (u+u'+v+v') - N(N-1)(N-2)/3.
inline double c_constant(int N, const UvParams& uv) {
  double n = static_cast<double>(N);
  return n * (n - 1.0) / 2.0 * uv.sum_real - n * (n - 1.0) * (n - 2.0) / 3.0;
}

/// The N-particle chain on Omega_N obtained from N independent one-particle
/// chains by the Doob transform with h = V_N. At N = 1 it coincides with
/// Bdp1Chain.
class NChain {
 public:
  NChain(UvParams uv, int N) : uv_(std::move(uv)), n_(N) {
    if (N < 1) throw std::invalid_argument("NChain: N must be >= 1");
  }

  const UvParams& params() const { return uv_; }
  int particle_count() const { return n_; }
  double c_constant() const { return gtdyn::c_constant(n_, uv_); }

  double one_particle_up(std::int64_t l) const {
    double ld = static_cast<double>(l);
    return detail::positive_real_rate((uv_.u() - ld) * (uv_.u_prime() - ld), "rate_up");
  }

  double one_particle_down(std::int64_t l) const {
    double ld = static_cast<double>(l);
    return detail::positive_real_rate((uv_.v() + ld) * (uv_.v_prime() + ld), "rate_down");
  }

  /// Rate of the jump l -> l +- e_i. Exactly 0 when the target leaves
  /// Omega_N (the Vandermonde ratio vanishes). The ratio V(l +- e_i)/V(l) is
  /// computed as a product of N-1 rational factors, never as a quotient of
  /// full Vandermonde products.
  double jump_rate(const OmegaPoint& l, std::size_t i, JumpDir dir) const {
    if (l.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("jump_rate: wrong level");
    if (i >= l.size()) throw std::out_of_range("jump_rate: index out of range");
    int step = dir == JumpDir::up ? 1 : -1;
    double ratio = 1.0;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (j == i) continue;
      std::int64_t diff = l.coords[i] - l.coords[j];
      std::int64_t shifted = diff + step;
      if (shifted == 0) return 0.0;  // target not strictly decreasing
      ratio *= static_cast<double>(shifted) / static_cast<double>(diff);
    }
    double base = dir == JumpDir::up ? one_particle_up(l.coords[i]) : one_particle_down(l.coords[i]);
    return ratio * base;
  }

  double total_rate(const OmegaPoint& l) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i)
      sum += jump_rate(l, i, JumpDir::up) + jump_rate(l, i, JumpDir::down);
    return sum;
  }

  /// Generator in rate form: sum over moves of rate * (F(target) - F(l)).
  double generator_apply(const std::map<OmegaPoint, double>& F, const OmegaPoint& l) const {
    double f0 = F.at(l);
    double acc = 0.0;
    OmegaPoint nbr;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (JumpDir dir : {JumpDir::up, JumpDir::down}) {
        double r = jump_rate(l, i, dir);
        if (r == 0.0) continue;
        if (!l.neighbor(i, dir == JumpDir::up ? 1 : -1, nbr))
          throw std::logic_error("generator_apply: positive rate out of Omega_N");
        acc += r * (F.at(nbr) - f0);
      }
    }
    return acc;
  }

  /// Generator in Doob form: V^{-1} D_N^free (V F) + C_N F, with (V F)(x)
  /// taken as 0 outside Omega_N (where V vanishes). Agrees with the rate
  /// form; both are kept as independent algebraic routes.
  double generator_apply_doob(const std::map<OmegaPoint, double>& F, const OmegaPoint& l) const {
    double v0 = vandermonde_d(l);
    double vf0 = v0 * F.at(l);
    double acc = 0.0;
    OmegaPoint nbr;
    for (std::size_t i = 0; i < l.size(); ++i) {
      double up = one_particle_up(l.coords[i]);
      double down = one_particle_down(l.coords[i]);
      double vf_up = l.neighbor(i, +1, nbr) ? vandermonde_d(nbr) * F.at(nbr) : 0.0;
      double vf_down = l.neighbor(i, -1, nbr) ? vandermonde_d(nbr) * F.at(nbr) : 0.0;
      acc += up * (vf_up - vf0) + down * (vf_down - vf0);
    }
    return acc / v0 + c_constant() * F.at(l);
  }

  /// Free generator sum_i D^[i] applied to an arbitrary function on Z^N.
  template <class Fn>
  double free_generator_apply(Fn&& G, const OmegaPoint& l) const {
    double g0 = G(l.coords);
    double acc = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::vector<std::int64_t> c = l.coords;
      c[i] += 1;
      double g_up = G(c);
      c[i] -= 2;
      double g_down = G(c);
      acc += one_particle_up(l.coords[i]) * (g_up - g0) +
             one_particle_down(l.coords[i]) * (g_down - g0);
    }
    return acc;
  }

  /// Unnormalized log-weight of the symmetrizing measure:
  /// sum_i one-particle log-weight(l_i) + 2 log V_N(l).
  double log_weight(const OmegaPoint& l) const {
    double acc = 0.0;
    for (std::int64_t c : l.coords) acc += one_particle_log_weight(uv_, c);
    return acc + 2.0 * std::log(vandermonde_d(l));
  }

  Trajectory<OmegaPoint> simulate(const OmegaPoint& l0, double t_max, std::uint64_t seed,
                                  std::uint64_t event_cap = kDefaultEventCap) const;

 private:
  UvParams uv_;
  int n_;
};

inline Trajectory<OmegaPoint> NChain::simulate(const OmegaPoint& l0, double t_max,
                                               std::uint64_t seed,
                                               std::uint64_t event_cap) const {
  if (l0.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("simulate: wrong level");
  if (!(t_max >= 0.0)) throw std::invalid_argument("simulate: t_max must be nonnegative");
  Trajectory<OmegaPoint> traj;
  traj.seed = seed;
  traj.events.emplace_back(0.0, l0);
  Rng rng(seed);

  OmegaPoint state = l0;
  std::size_t n = state.size();
  // Per-coordinate rates, updated incrementally: when coordinate i moves,
  // only one Vandermonde factor of each other coordinate's rate changes.
  std::vector<double> up(n), down(n);
  auto rebuild = [&](std::size_t i) {
    up[i] = jump_rate(state, i, JumpDir::up);
    down[i] = jump_rate(state, i, JumpDir::down);
  };
  for (std::size_t i = 0; i < n; ++i) rebuild(i);

  double t = 0.0;
  for (std::uint64_t ev = 0; t < t_max; ++ev) {
    if (ev >= event_cap) {
      traj.truncated = true;
      break;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += up[i] + down[i];
    if (total <= 0.0) break;
    t += rng.exponential(total);
    if (t > t_max) break;

    double pick = rng.uniform01() * total;
    std::size_t move_i = 0;
    int step = 0;
    for (std::size_t i = 0; i < n && step == 0; ++i) {
      if (up[i] > 0.0) {
        if (pick < up[i]) {
          move_i = i;
          step = +1;
          break;
        }
        pick -= up[i];
      }
      if (down[i] > 0.0) {
        if (pick < down[i]) {
          move_i = i;
          step = -1;
          break;
        }
        pick -= down[i];
      }
    }
    if (step == 0) {
      // rounding pushed pick past the cumulative sum; take the last
      // admissible move
      for (std::size_t i = n; i-- > 0 && step == 0;) {
        if (down[i] > 0.0) {
          move_i = i;
          step = -1;
        } else if (up[i] > 0.0) {
          move_i = i;
          step = +1;
        }
      }
    }

    std::int64_t old_li = state.coords[move_i];
    state.coords[move_i] += step;
    traj.events.emplace_back(t, state);

    // Incremental update: rates of j != move_i change by one factor; the
    // multiplicative patch is invalid across zero or near-zero factors, so
    // adjacent coordinates are rebuilt. A periodic full rebuild bounds
    // floating-point drift.
    if ((ev & 1023u) == 1023u) {
      for (std::size_t j = 0; j < n; ++j) rebuild(j);
      continue;
    }
    rebuild(move_i);
    std::int64_t new_li = state.coords[move_i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == move_i) continue;
      std::int64_t lj = state.coords[j];
      if (std::llabs(lj - old_li) <= 2 || std::llabs(lj - new_li) <= 2) {
        rebuild(j);
        continue;
      }
      auto patch = [&](double& rate, int dj) {
        double old_factor = static_cast<double>(lj + dj - old_li) / static_cast<double>(lj - old_li);
        double new_factor = static_cast<double>(lj + dj - new_li) / static_cast<double>(lj - new_li);
        rate *= new_factor / old_factor;
      };
      if (up[j] != 0.0) patch(up[j], +1);
      if (down[j] != 0.0) patch(down[j], -1);
    }
  }
  return traj;
}

}  // namespace gtdyn
