#pragma once

// Self-contained 2x2 (and small-vector) linear algebra: rotations,
// reflections, a closed-form SVD, polar decomposition, and distances to
// rotation cosets.  Everything here is pure and allocation-free; all other
// modules build on these primitives.

#include <cmath>
#include <stdexcept>

namespace ngonstar {

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }
};

[[nodiscard]] inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Counterclockwise quarter turn of `v`.
[[nodiscard]] inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

// Angle of `v` in (-pi, pi].
[[nodiscard]] inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

// Row-major 2x2 matrix of finite reals.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  [[nodiscard]] static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  [[nodiscard]] Mat2 transpose() const { return {a11, a21, a12, a22}; }
  [[nodiscard]] double det() const { return a11 * a22 - a12 * a21; }
  [[nodiscard]] double trace() const { return a11 + a22; }

  // Frobenius norm.
  [[nodiscard]] double fnorm() const {
    return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
  }

  // Largest entry magnitude.
  [[nodiscard]] double max_abs() const {
    return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                    std::max(std::fabs(a21), std::fabs(a22)));
  }

  [[nodiscard]] Vec2 apply(Vec2 v) const {
    return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2 operator*(double s, const Mat2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
};

// Outer product u v^T.
[[nodiscard]] inline Mat2 outer(Vec2 u, Vec2 v) {
  return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
}

// Symmetric part (A + A^T) / 2.
[[nodiscard]] inline Mat2 sym(const Mat2& m) {
  const double off = 0.5 * (m.a12 + m.a21);
  return {m.a11, off, off, m.a22};
}

// ---------------------------------------------------------------------------
// Rotations and reflections
// ---------------------------------------------------------------------------

// Counterclockwise rotation by `angle` radians; orthogonal with det +1.
[[nodiscard]] inline Mat2 rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, -s, s, c};
}

// Reflection e (x) e - e_perp (x) e_perp about the axis spanned by the unit
// vector `e`; symmetric, orthogonal, det -1, fixes `e`.
[[nodiscard]] inline Mat2 reflection_about(Vec2 e) {
  if (std::fabs(norm(e) - 1.0) > 1e-12) {
    throw std::invalid_argument("reflection_about: axis vector must be unit length");
  }
  const Vec2 ep = perp(e);
  return outer(e, e) - outer(ep, ep);
}

// Reflection about the axis at angle `t` to the first coordinate axis.
[[nodiscard]] inline Mat2 reflection_at_angle(double t) {
  const double c = std::cos(2.0 * t), s = std::sin(2.0 * t);
  return {c, s, s, -c};
}

// Rotation angle in (-pi, pi] of the nearest rotation to `m` (for an exact
// rotation matrix this is its own angle).
[[nodiscard]] inline double rotation_angle(const Mat2& m) {
  return std::atan2(m.a21 - m.a12, m.a11 + m.a22);
}

// ---------------------------------------------------------------------------
// Singular value decomposition
// ---------------------------------------------------------------------------

// Factorization M = R(left_angle) * diag(sigma1, det_sign * sigma2) *
// R(right_angle) with sigma1 >= sigma2 >= 0 and det_sign in {-1, +1}.
struct SVD2 {
  double sigma1 = 0.0;       // largest singular value
  double sigma2 = 0.0;       // smallest singular value
  double left_angle = 0.0;   // angle of the left rotation factor
  double right_angle = 0.0;  // angle of the right rotation factor
  int det_sign = 1;          // sign of det(M) (+1 for det >= 0)

  // Rebuild the decomposed matrix from the factors.
  [[nodiscard]] Mat2 reconstruct() const {
    const Mat2 d{sigma1, 0.0, 0.0, static_cast<double>(det_sign) * sigma2};
    return rotation(left_angle) * d * rotation(right_angle);
  }
};

// Closed-form SVD of a 2x2 matrix via the rotation/reflection split of M
// into its conformal and anti-conformal parts.  Deterministic: no iteration.
// Degenerate inputs (scalar multiples of rotations or reflections) take a
// fixed tie-break with the left factor equal to the identity.
[[nodiscard]] inline SVD2 svd2(const Mat2& m) {
  const double e = 0.5 * (m.a11 + m.a22);
  const double f = 0.5 * (m.a11 - m.a22);
  const double g = 0.5 * (m.a21 + m.a12);
  const double h = 0.5 * (m.a21 - m.a12);
  const double conf = std::hypot(e, h);   // conformal part magnitude
  const double anti = std::hypot(f, g);   // anti-conformal part magnitude

  SVD2 out;
  out.sigma1 = conf + anti;
  const double d = m.det();
  out.det_sign = (d < 0.0) ? -1 : 1;
  // sigma1 * sigma2 = |det|; dividing avoids cancellation in conf - anti.
  out.sigma2 = (out.sigma1 > 0.0) ? std::fabs(d) / out.sigma1 : 0.0;

  if (anti == 0.0) {
    // Scalar multiple of a rotation: put the whole rotation on the right.
    out.left_angle = 0.0;
    out.right_angle = std::atan2(h, e);
    return out;
  }
  if (conf == 0.0) {
    // Scalar multiple of a reflection: diag(s, -s) * R(-a1) reproduces it.
    out.left_angle = 0.0;
    out.right_angle = -std::atan2(g, f);
    return out;
  }
  const double a1 = std::atan2(g, f);
  const double a2 = std::atan2(h, e);
  out.left_angle = 0.5 * (a2 + a1);
  out.right_angle = 0.5 * (a2 - a1);
  return out;
}

// ---------------------------------------------------------------------------
// Rotation cosets and polar decomposition
// ---------------------------------------------------------------------------

// min over R in SO(2) of |F - R M|_F.  Evaluated at the minimizing rotation
// angle rather than through the trace closed form, which cancels
// catastrophically when F sits on the coset.  Valid for either sign of
// det(F M^T).
[[nodiscard]] inline double dist_to_rotation_coset(const Mat2& f, const Mat2& m) {
  const Mat2 a = f * m.transpose();
  const double theta = std::atan2(a.a21 - a.a12, a.a11 + a.a22);
  const Mat2 r = rotation(theta);
  return (f - r * m).fnorm();
}

// Result of the polar factorization M = rotation * stretch.
struct Polar2 {
  Mat2 rotation_factor;  // element of SO(2)
  Mat2 stretch;          // symmetric positive definite
};

// Polar decomposition of a matrix with positive determinant.
[[nodiscard]] inline Polar2 polar_decompose(const Mat2& m) {
  const double d = m.det();
  if (!(d > 0.0)) {
    throw std::invalid_argument("polar_decompose: determinant must be positive");
  }
  // R = (M + det-normalized cofactor transpose) normalized; closed form for 2x2:
  // R is the rotation by the angle that symmetrizes R^T M.
  const double theta = std::atan2(m.a21 - m.a12, m.a11 + m.a22);
  const Mat2 r = rotation(theta);
  const Mat2 v = r.transpose() * m;
  return {r, sym(v)};
}

}  // namespace ngonstar
