#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtdyn/omega.hpp"

namespace gtdyn {

using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt superfactorial(std::size_t n) {
  // 1! 2! ... (n-1)!
  BigInt acc = 1, fact = 1;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    fact *= static_cast<int>(k);
    acc *= fact;
  }
  return acc;
}

}  // namespace detail

/// Weyl dimension of the irreducible representation indexed by la:
///   prod_{i<j} (l_i - l_j) / (1! 2! ... (N-1)!),
/// exact; the division is checked to be exact.
inline BigInt dim_weyl(const Signature& la) {
  OmegaPoint l = from_signature(la);
  BigInt num = vandermonde_big(l);
  BigInt den = detail::superfactorial(la.size());
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("dim_weyl: inexact division, implementation bug");
  return q;
}

/// Independent dimension count: the number of Gelfand-Tsetlin schemes topped
/// by la, by direct recursion dim(la) = sum over interlacing mu of dim(mu).
/// Brute-force scope: N <= 8, |parts| <= 10.
class GtDimensionOracle {
 public:
  BigInt count(const Signature& la) {
    if (la.size() > 8) throw std::out_of_range("dim_gt_oracle: N <= 8 only");
    for (auto p : la.parts)
      if (p < -10 || p > 10) throw std::out_of_range("dim_gt_oracle: |parts| <= 10 only");
    return count_rec(la.parts);
  }

 private:
  BigInt count_rec(const std::vector<std::int64_t>& la) {
    if (la.size() == 1) return 1;
    auto it = memo_.find(la);
    if (it != memo_.end()) return it->second;
    std::vector<std::int64_t> mu(la.size() - 1);
    BigInt total = 0;
    enumerate(la, mu, 0, total);
    memo_.emplace(la, total);
    return total;
  }

  void enumerate(const std::vector<std::int64_t>& la, std::vector<std::int64_t>& mu,
                 std::size_t k, BigInt& total) {
    if (k == mu.size()) {
      total += count_rec(mu);
      return;
    }
    for (std::int64_t v = la[k + 1]; v <= la[k]; ++v) {
      mu[k] = v;
      enumerate(la, mu, k + 1, total);
    }
  }

  std::map<std::vector<std::int64_t>, BigInt> memo_;
};

inline BigInt dim_gt_oracle(const Signature& la) { return GtDimensionOracle().count(la); }

/// One row of the link Lambda^N_{N-1}: all mu interlaced with la(l), with
/// exact probabilities dim(mu)/dim(la). The interlacing constraints are
/// coordinate-wise, so mu_k ranges over [la_{k+1}, la_k] independently.
inline std::vector<std::pair<OmegaPoint, BigRat>> link_row(const OmegaPoint& l) {
  if (l.size() < 2) throw std::invalid_argument("link_row: N must be >= 2");
  Signature la = to_signature(l);
  BigInt dim_la = dim_weyl(la);
  std::vector<std::pair<OmegaPoint, BigRat>> row;
  std::vector<std::int64_t> mu(la.size() - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == mu.size()) {
      Signature m(mu);
      row.emplace_back(from_signature(m), BigRat(dim_weyl(m), dim_la));
      return;
    }
    for (std::int64_t v = la.parts[k + 1]; v <= la.parts[k]; ++v) {
      mu[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return row;
}

/// Streams (target, probability) pairs of a link row in double precision.
/// dim(mu)/dim(la) = (N-1)! V(mu)/V(la); computed in 64-bit integers with a
/// big-integer fallback on overflow.
template <class Fn>
void for_each_link_target(const OmegaPoint& l, Fn&& fn) {
  if (l.size() < 2) throw std::invalid_argument("for_each_link_target: N must be >= 2");
  Signature la = to_signature(l);
  std::int64_t fact = 1;
  for (std::size_t k = 2; k + 1 <= l.size(); ++k) fact *= static_cast<std::int64_t>(k);
  double denom;
  bool big = false;
  BigInt vl_big;
  try {
    denom = static_cast<double>(vandermonde_i64(l));
  } catch (const std::overflow_error&) {
    big = true;
    vl_big = vandermonde_big(l);
    denom = vl_big.convert_to<double>();
  }
  std::vector<std::int64_t> mu(la.size() - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == mu.size()) {
      OmegaPoint target = from_signature(Signature(mu));
      double num;
      if (!big) {
        try {
          num = static_cast<double>(vandermonde_i64(target));
        } catch (const std::overflow_error&) {
          num = vandermonde_big(target).convert_to<double>();
        }
      } else {
        num = vandermonde_big(target).convert_to<double>();
      }
      fn(std::move(target), static_cast<double>(fact) * num / denom);
      return;
    }
    for (std::int64_t v = la.parts[k + 1]; v <= la.parts[k]; ++v) {
      mu[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

/// A row-stochastic kernel between two discrete spaces, stored sparsely.
/// Levels identify the source/target spaces; V is the probability type
/// (BigRat for exact kernels, double otherwise).
template <class Src, class Tgt, class V>
struct SparseKernel {
  int source_level = 0;
  int target_level = 0;
  std::map<Src, std::vector<std::pair<Tgt, V>>> rows;

  /// Row-sum check: exact for rational entries, 1e-12 for floating ones.
  void validate() const {
    for (const auto& [src, row] : rows) {
      V sum{};
      for (const auto& [tgt, p] : row) {
        if (!(p > V(0))) throw std::invalid_argument("SparseKernel: probabilities must be > 0");
        sum += p;
      }
      if constexpr (std::is_same_v<V, double>) {
        if (std::abs(sum - 1.0) > 1e-12)
          throw std::invalid_argument("SparseKernel: row does not sum to 1");
      } else {
        if (sum != V(1)) throw std::invalid_argument("SparseKernel: row does not sum to 1");
      }
    }
  }
};

/// Pushforward (MK)(y) = sum_x M(x) K(x,y). Requires every state of M to
/// have a row in K; preserves total mass.
template <class Src, class Tgt, class V, class W>
std::map<Tgt, W> push_measure(const std::map<Src, W>& m, const SparseKernel<Src, Tgt, V>& k) {
  std::map<Tgt, W> out;
  for (const auto& [x, mass] : m) {
    auto it = k.rows.find(x);
    if (it == k.rows.end())
      throw std::invalid_argument("push_measure: measure state without a kernel row");
    for (const auto& [y, p] : it->second) out[y] += mass * static_cast<W>(p);
  }
  return out;
}

/// Kernel composition (KL)(x,z) = sum_y K(x,y) L(y,z).
template <class A, class B, class C, class V>
SparseKernel<A, C, V> compose(const SparseKernel<A, B, V>& k, const SparseKernel<B, C, V>& l) {
  if (k.target_level != l.source_level)
    throw std::invalid_argument("compose: target space of K differs from source space of L");
  SparseKernel<A, C, V> out;
  out.source_level = k.source_level;
  out.target_level = l.target_level;
  for (const auto& [x, row] : k.rows) {
    std::map<C, V> acc;
    for (const auto& [y, p] : row) {
      auto it = l.rows.find(y);
      if (it == l.rows.end())
        throw std::invalid_argument("compose: K reaches a state without a row in L");
      for (const auto& [z, q] : it->second) acc[z] += p * q;
    }
    auto& out_row = out.rows[x];
    out_row.assign(acc.begin(), acc.end());
  }
  return out;
}

/// Materializes Lambda^N_{N-1} over the given source states.
inline SparseKernel<OmegaPoint, OmegaPoint, BigRat> make_link_kernel(
    const std::vector<OmegaPoint>& sources) {
  SparseKernel<OmegaPoint, OmegaPoint, BigRat> k;
  if (!sources.empty()) {
    k.source_level = static_cast<int>(sources.front().size());
    k.target_level = k.source_level - 1;
  }
  for (const auto& l : sources) {
    auto row = link_row(l);
    k.rows.emplace(l, std::move(row));
  }
  return k;
}

}  // namespace gtdyn
