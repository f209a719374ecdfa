#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtdyn/rng.hpp"

namespace gtdyn {

inline constexpr std::uint64_t kDefaultEventCap = 100'000'000;

/// Time-stamped path of an event-driven chain. events[0] is (0, initial
/// state); each later entry is a jump. `truncated` is set when the event cap
/// was reached before t_max (the chain may explode in principle, so the
/// simulator never asserts termination).
template <class State>
struct Trajectory {
  std::vector<std::pair<double, State>> events;
  std::uint64_t seed = 0;
  bool truncated = false;

  const State& final_state() const { return events.back().second; }
  double final_time() const { return events.back().first; }
};

/// Occupation time per state over [0, t_max], including the stretch from the
/// last jump to t_max.
template <class State>
std::map<State, double> occupation_times(const Trajectory<State>& traj, double t_max) {
  std::map<State, double> occ;
  const auto& ev = traj.events;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    double until = (k + 1 < ev.size()) ? ev[k + 1].first : t_max;
    if (until > ev[k].first) occ[ev[k].second] += until - ev[k].first;
  }
  return occ;
}

/// Event-driven simulation of a birth-death chain on the integers: at state
/// l, wait Exp(up(l)+down(l)), move up with probability up/(up+down). Jumps
/// whose time stamp would exceed t_max are not recorded. A state with zero
/// total rate is absorbing.
template <class UpRate, class DownRate>
Trajectory<std::int64_t> simulate_birth_death(UpRate&& up, DownRate&& down, std::int64_t l0,
                                              double t_max, std::uint64_t seed,
                                              std::uint64_t event_cap = kDefaultEventCap) {
  if (!(t_max >= 0.0)) throw std::invalid_argument("simulate: t_max must be nonnegative");
  Trajectory<std::int64_t> traj;
  traj.seed = seed;
  traj.events.emplace_back(0.0, l0);
  Rng rng(seed);
  double t = 0.0;
  std::int64_t l = l0;
  for (std::uint64_t n = 0; t < t_max; ++n) {
    if (n >= event_cap) {
      traj.truncated = true;
      break;
    }
    double a_up = up(l), a_down = down(l);
    double total = a_up + a_down;
    if (total <= 0.0) break;  // absorbing
    t += rng.exponential(total);
    if (t > t_max) break;
    l += (rng.uniform01() * total < a_up) ? 1 : -1;
    traj.events.emplace_back(t, l);
  }
  return traj;
}

}  // namespace gtdyn
