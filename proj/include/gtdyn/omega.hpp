#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtdyn {

using BigInt = boost::multiprecision::cpp_int;

/// A point of Omega_N: a strictly decreasing integer N-tuple.
struct OmegaPoint {
  std::vector<std::int64_t> coords;

  OmegaPoint() = default;
  explicit OmegaPoint(std::vector<std::int64_t> c) : coords(std::move(c)) {
    for (std::size_t i = 1; i < coords.size(); ++i)
      if (coords[i - 1] <= coords[i])
        throw std::invalid_argument("OmegaPoint: coordinates must be strictly decreasing");
  }

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }

  /// Neighbor l +- e_i, or nullopt-like failure: returns false when the
  /// target leaves Omega_N.
  bool neighbor(std::size_t i, int dir, OmegaPoint& out) const {
    std::vector<std::int64_t> c = coords;
    c[i] += dir;
    if (i > 0 && c[i - 1] <= c[i]) return false;
    if (i + 1 < c.size() && c[i] <= c[i + 1]) return false;
    out.coords = std::move(c);
    return true;
  }

  friend bool operator==(const OmegaPoint& a, const OmegaPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const OmegaPoint& a, const OmegaPoint& b) { return a.coords < b.coords; }
};

struct OmegaPointHash {
  std::size_t operator()(const OmegaPoint& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t c : p.coords) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A signature: a nonincreasing integer N-tuple.
struct Signature {
  std::vector<std::int64_t> parts;

  Signature() = default;
  explicit Signature(std::vector<std::int64_t> p) : parts(std::move(p)) {
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i - 1] < parts[i])
        throw std::invalid_argument("Signature: parts must be nonincreasing");
  }

  std::size_t size() const { return parts.size(); }
  std::int64_t operator[](std::size_t i) const { return parts[i]; }

  friend bool operator==(const Signature& a, const Signature& b) { return a.parts == b.parts; }
  friend bool operator<(const Signature& a, const Signature& b) { return a.parts < b.parts; }
};

/// l_i = lambda_i + N - i (1-based i); the standard bijection.
inline OmegaPoint from_signature(const Signature& la) {
  std::int64_t n = static_cast<std::int64_t>(la.size());
  std::vector<std::int64_t> c(la.size());
  for (std::int64_t i = 0; i < n; ++i) c[i] = la.parts[i] + (n - 1 - i);
  return OmegaPoint(std::move(c));
}

inline Signature to_signature(const OmegaPoint& l) {
  std::int64_t n = static_cast<std::int64_t>(l.size());
  std::vector<std::int64_t> p(l.size());
  for (std::int64_t i = 0; i < n; ++i) p[i] = l.coords[i] - (n - 1 - i);
  return Signature(std::move(p));
}

/// Interlacing mu < la: la_1 >= mu_1 >= la_2 >= ... >= mu_{N-1} >= la_N.
inline bool interlaces(const Signature& mu, const Signature& la) {
  if (mu.size() + 1 != la.size())
    throw std::invalid_argument("interlaces: lengths must be N-1 and N");
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (!(la.parts[k] >= mu.parts[k] && mu.parts[k] >= la.parts[k + 1])) return false;
  return true;
}

/// V_N(l) = prod_{i<j} (l_i - l_j), exact in 64 bits; throws
/// std::overflow_error when the product leaves the 64-bit range.
inline std::int64_t vandermonde_i64(const OmegaPoint& l) {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (__builtin_mul_overflow(v, l.coords[i] - l.coords[j], &v))
        throw std::overflow_error("vandermonde_i64: 64-bit overflow, use vandermonde_big");
    }
  return v;
}

inline BigInt vandermonde_big(const OmegaPoint& l) {
  BigInt v = 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) v *= l.coords[i] - l.coords[j];
  return v;
}

inline double vandermonde_d(const OmegaPoint& l) {
  double v = 1.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      v *= static_cast<double>(l.coords[i] - l.coords[j]);
  return v;
}

/// All of Omega_N with |l_i| <= bound, in a fixed deterministic order.
inline std::vector<OmegaPoint> enumerate_box(int N, std::int64_t bound) {
  if (N < 1) throw std::invalid_argument("enumerate_box: N must be >= 1");
  std::vector<OmegaPoint> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(N));
  std::function<void(int, std::int64_t)> rec = [&](int depth, std::int64_t max_allowed) {
    if (depth == N) {
      OmegaPoint p;
      p.coords = cur;  // built strictly decreasing
      out.push_back(std::move(p));
      return;
    }
    for (std::int64_t v = max_allowed; v >= -bound + (N - 1 - depth); --v) {
      cur[static_cast<std::size_t>(depth)] = v;
      rec(depth + 1, v - 1);
    }
  };
  rec(0, bound);
  return out;
}

}  // namespace gtdyn
