#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gtdyn/gammafn.hpp"

namespace gtdyn {

namespace detail {

inline constexpr double kRealnessAbsTol = 1e-12;   // |Im| below this counts as real
inline constexpr double kConjugacyRelTol = 1e-12;  // on imaginary parts

inline bool nearly_real(cplx a) { return std::abs(a.imag()) <= kRealnessAbsTol; }

inline bool conjugate_pair(cplx a, cplx b) {
  double scale_im = std::max({std::abs(a.imag()), std::abs(b.imag()), 1e-300});
  double scale_re = std::max({std::abs(a.real()), std::abs(b.real()), 1.0});
  return std::abs(a.imag() + b.imag()) <= kConjugacyRelTol * scale_im &&
         std::abs(a.real() - b.real()) <= kConjugacyRelTol * scale_re;
}

}  // namespace detail

/// Classification of admissible couples: either a nonreal conjugate pair, or
/// two reals strictly inside the same unit interval (m, m+1). Equivalent to
/// (a-l)(b-l) > 0 for every integer l. Total function, never throws.
inline bool check_admissible(cplx a, cplx b) {
  bool a_real = detail::nearly_real(a);
  bool b_real = detail::nearly_real(b);
  if (!a_real && !b_real) return detail::conjugate_pair(a, b);
  if (a_real && b_real) {
    double x = a.real(), y = b.real();
    double fx = std::floor(x), fy = std::floor(y);
    if (x == fx || y == fy) return false;  // open interval: integers rejected
    return fx == fy;
  }
  return false;
}

/// A validated admissible couple. Nonreal pairs are canonicalized to exact
/// conjugates and real pairs to exactly real values, so downstream complex
/// arithmetic cancels imaginary parts exactly.
struct AdmissiblePair {
  cplx a, b;

  AdmissiblePair(cplx a_, cplx b_) : a(a_), b(b_) {
    if (!check_admissible(a, b))
      throw std::invalid_argument("AdmissiblePair: (" + to_string(a) + ", " + to_string(b) +
                                  ") is not admissible");
    if (detail::nearly_real(a)) {
      a = cplx(a.real(), 0.0);
      b = cplx(b.real(), 0.0);
    } else {
      b = std::conj(a);
    }
  }

  double sum_real() const { return a.real() + b.real(); }

  static std::string to_string(cplx z) {
    return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
           std::to_string(z.imag()) + "i)";
  }
};

/// Quadruple (u,u',v,v') of the one- and N-particle chains.
struct UvParams {
  AdmissiblePair uu;  // (u, u')
  AdmissiblePair vv;  // (v, v')
  double sum_real;    // u + u' + v + v', real by admissibility

  UvParams(AdmissiblePair uu_, AdmissiblePair vv_)
      : uu(uu_), vv(vv_), sum_real(uu_.sum_real() + vv_.sum_real()) {}
  UvParams(cplx u, cplx up, cplx v, cplx vp) : UvParams(AdmissiblePair(u, up), AdmissiblePair(v, vp)) {}

  cplx u() const { return uu.a; }
  cplx u_prime() const { return uu.b; }
  cplx v() const { return vv.a; }
  cplx v_prime() const { return vv.b; }
};

/// Fixed quadruple (z,z',w,w') from which every level's (u,u',v,v') derives.
struct ZwParams {
  AdmissiblePair zz;  // (z, z')
  AdmissiblePair ww;  // (w, w')

  ZwParams(AdmissiblePair zz_, AdmissiblePair ww_) : zz(zz_), ww(ww_) {}
  ZwParams(cplx z, cplx zp, cplx w, cplx wp) : zz(z, zp), ww(w, wp) {}

  double sum_real() const { return zz.sum_real() + ww.sum_real(); }
};

/// Level-N parameters (u,u',v,v') = (z+N-1, z'+N-1, w, w'). Shifting a real
/// admissible pair by an integer lands in another unit interval; a conjugate
/// pair stays conjugate, so the result is again admissible.
inline UvParams shift_params(const ZwParams& zw, int N) {
  if (N < 1) throw std::invalid_argument("shift_params: N must be >= 1");
  double s = static_cast<double>(N - 1);
  return UvParams(AdmissiblePair(zw.zz.a + s, zw.zz.b + s), zw.ww);
}

/// The symmetrizing measure at level N is finite iff u+u'+v+v' > 2N-3.
inline bool measure_finite(const UvParams& uv, int N) {
  if (N < 1) throw std::invalid_argument("measure_finite: N must be >= 1");
  return uv.sum_real > 2.0 * N - 3.0;
}

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i" into a complex number.
inline cplx parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_complex: empty token");
  std::string s = text;
  bool imaginary = false;
  if (s.back() == 'i' || s.back() == 'I') {
    imaginary = true;
    s.pop_back();
  }
  if (!imaginary) {
    std::size_t pos = 0;
    double re = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("parse_complex: bad token '" + text + "'");
    return {re, 0.0};
  }
  // find the split between real part and imaginary coefficient
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto parse_coef = [](const std::string& c) -> double {
    if (c.empty() || c == "+") return 1.0;
    if (c == "-") return -1.0;
    std::size_t pos = 0;
    double x = std::stod(c, &pos);
    if (pos != c.size()) throw std::invalid_argument("parse_complex: bad coefficient '" + c + "'");
    return x;
  };
  if (split == std::string::npos) return {0.0, parse_coef(s)};
  std::size_t pos = 0;
  double re = std::stod(s.substr(0, split), &pos);
  if (pos != split) throw std::invalid_argument("parse_complex: bad token '" + text + "'");
  return {re, parse_coef(s.substr(split))};
}

}  // namespace gtdyn
