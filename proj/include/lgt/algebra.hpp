#pragma once

#include <cmath>
#include <complex>

namespace lgt {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

// 2x2 complex matrix, row-major. Everything internal-space in 1+1D fits here,
// so we keep a hand-rolled kernel instead of pulling in a matrix library.
struct Mat2 {
  cplx m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend Mat2 operator*(cplx s, const Mat2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
  }
  friend Mat2 operator*(const Mat2& a, cplx s) { return s * a; }

  double max_abs() const {
    return std::max(std::max(std::abs(m00), std::abs(m01)),
                    std::max(std::abs(m10), std::abs(m11)));
  }
};

// Two-component internal state at one lattice site.
struct Spinor {
  cplx up{}, dn{};

  friend Spinor operator+(const Spinor& a, const Spinor& b) {
    return {a.up + b.up, a.dn + b.dn};
  }
  friend Spinor operator-(const Spinor& a, const Spinor& b) {
    return {a.up - b.up, a.dn - b.dn};
  }
  friend Spinor operator*(cplx s, const Spinor& a) {
    return {s * a.up, s * a.dn};
  }
  friend Spinor operator*(const Mat2& m, const Spinor& a) {
    return {m.m00 * a.up + m.m01 * a.dn, m.m10 * a.up + m.m11 * a.dn};
  }

  double abs2() const { return std::norm(up) + std::norm(dn); }
  double max_abs() const { return std::max(std::abs(up), std::abs(dn)); }
};

// psi^dag phi, conjugating the left argument.
inline cplx cdot(const Spinor& a, const Spinor& b) {
  return std::conj(a.up) * b.up + std::conj(a.dn) * b.dn;
}

}  // namespace lgt
