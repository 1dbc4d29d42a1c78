// Minimal fixed-size linear algebra for 2-dimensional section maps.
//
// Everything in this library lives on two-dimensional Poincare sections, so
// a pair of small value types is all that is needed.  Eigenvalues of a 2x2
// matrix are obtained in closed form from trace and determinant.

#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace grazecont {

/// Column vector in R^2.
struct Vec2 {
  double v1 = 0.0;
  double v2 = 0.0;

  Vec2 operator+(const Vec2& o) const { return {v1 + o.v1, v2 + o.v2}; }
  Vec2 operator-(const Vec2& o) const { return {v1 - o.v1, v2 - o.v2}; }
  Vec2 operator*(double s) const { return {v1 * s, v2 * s}; }

  /// Maximum norm, used for Newton convergence tests.
  double max_norm() const { return std::max(std::abs(v1), std::abs(v2)); }
};

/// Dense 2x2 matrix, row-major component naming.
struct Mat2 {
  double m11 = 0.0, m12 = 0.0;
  double m21 = 0.0, m22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double det() const { return m11 * m22 - m12 * m21; }
  double trace() const { return m11 + m22; }

  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }

  Vec2 operator*(const Vec2& x) const {
    return {m11 * x.v1 + m12 * x.v2, m21 * x.v1 + m22 * x.v2};
  }

  Mat2 operator-(const Mat2& o) const {
    return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
  }

  /// Inverse; the caller is responsible for checking det() beforehand.
  Mat2 inverse() const {
    const double d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }
};

/// Eigenvalues of a 2x2 matrix via the quadratic formula on trace and
/// determinant.  A real pair is returned in descending order of the
/// eigenvalue itself (so the first entry tracks a multiplier near +1 and the
/// second one a multiplier heading towards -1); a complex-conjugate pair is
/// returned with the positive imaginary part first.
inline std::pair<std::complex<double>, std::complex<double>> eigenvalues_2x2(
    const Mat2& m) {
  const double tr = m.trace();
  const double d = m.det();
  const double disc = tr * tr - 4.0 * d;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Evaluate the larger-magnitude root first and recover the other from
    // the determinant when possible; this avoids cancellation.
    const double big = (tr >= 0.0) ? 0.5 * (tr + root) : 0.5 * (tr - root);
    double other;
    if (big != 0.0) {
      other = d / big;
    } else {
      other = 0.5 * (tr + ((tr >= 0.0) ? -root : root));
    }
    const double hi = std::max(big, other);
    const double lo = std::min(big, other);
    return {std::complex<double>(hi, 0.0), std::complex<double>(lo, 0.0)};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {std::complex<double>(0.5 * tr, im), std::complex<double>(0.5 * tr, -im)};
}

}  // namespace grazecont
