#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "minksurf/errors.hpp"

namespace minksurf {

using Complex = std::complex<double>;

/// Lightlike classification tolerance: |<v,v>| below this counts as null.
inline constexpr double kLightlikeTol = 1e-12;

/// Real 4-vector of R^4_1. Index 0 is the timelike direction; the bilinear
/// form has signature (-,+,+,+).
struct RVec4 {
  std::array<double, 4> e{0.0, 0.0, 0.0, 0.0};

  double& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  const double& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  RVec4& operator+=(const RVec4& o) {
    for (int i = 0; i < 4; ++i) e[i] += o.e[i];
    return *this;
  }
  RVec4& operator-=(const RVec4& o) {
    for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
    return *this;
  }
  RVec4& operator*=(double s) {
    for (auto& x : e) x *= s;
    return *this;
  }
  friend RVec4 operator+(RVec4 a, const RVec4& b) { return a += b; }
  friend RVec4 operator-(RVec4 a, const RVec4& b) { return a -= b; }
  friend RVec4 operator*(double s, RVec4 v) { return v *= s; }
  friend RVec4 operator*(RVec4 v, double s) { return v *= s; }
  friend RVec4 operator/(RVec4 v, double s) { return v *= (1.0 / s); }
  friend RVec4 operator-(RVec4 v) {
    for (auto& x : v.e) x = -x;
    return v;
  }
  friend bool operator==(const RVec4& a, const RVec4& b) { return a.e == b.e; }
};

/// Complexified 4-vector; carries the bilinear (not Hermitian) extension of
/// the Lorentz form.
struct CVec4 {
  std::array<Complex, 4> e{};

  Complex& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  CVec4& operator+=(const CVec4& o) {
    for (int i = 0; i < 4; ++i) e[i] += o.e[i];
    return *this;
  }
  CVec4& operator-=(const CVec4& o) {
    for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
    return *this;
  }
  CVec4& operator*=(Complex s) {
    for (auto& x : e) x *= s;
    return *this;
  }
  friend CVec4 operator+(CVec4 a, const CVec4& b) { return a += b; }
  friend CVec4 operator-(CVec4 a, const CVec4& b) { return a -= b; }
  friend CVec4 operator*(Complex s, CVec4 v) { return v *= s; }
  friend CVec4 operator*(CVec4 v, Complex s) { return v *= s; }
  friend CVec4 operator-(CVec4 v) {
    for (auto& x : v.e) x = -x;
    return v;
  }
};

inline CVec4 to_complex(const RVec4& v) {
  return CVec4{{Complex(v[0]), Complex(v[1]), Complex(v[2]), Complex(v[3])}};
}

inline CVec4 conj(const CVec4& v) {
  return CVec4{{std::conj(v[0]), std::conj(v[1]), std::conj(v[2]), std::conj(v[3])}};
}

inline RVec4 real_part(const CVec4& v) {
  return RVec4{{v[0].real(), v[1].real(), v[2].real(), v[3].real()}};
}

inline RVec4 imag_part(const CVec4& v) {
  return RVec4{{v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag()}};
}

/// <u,v> = -u0 v0 + u1 v1 + u2 v2 + u3 v3.
inline double lorentz_dot(const RVec4& u, const RVec4& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

/// Complex bilinear extension; restricted to real vectors it coincides with
/// lorentz_dot exactly.
inline Complex clorentz_dot(const CVec4& u, const CVec4& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double max_abs_component(const RVec4& v) {
  double m = 0.0;
  for (const double x : v.e) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_component(const CVec4& v) {
  double m = 0.0;
  for (const Complex& x : v.e) m = std::max(m, std::abs(x));
  return m;
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

/// Sign classification of <v,v>. Throws ZeroVector on the exact zero vector.
inline CausalCharacter causal_character(const RVec4& v, double tol = kLightlikeTol) {
  if (v == RVec4{}) throw ZeroVector();
  const double q = lorentz_dot(v, v);
  if (std::abs(q) <= tol) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

}  // namespace minksurf
