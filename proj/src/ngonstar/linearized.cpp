#include "ngonstar/linearized.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/single_layer.hpp"

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("strain wells need n >= 3");
}

// Reflection about the first coordinate axis.
Mat2 axis_flip() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 rotation_step(int n, int k) { return rotation(2.0 * kPi * k / n); }

}  // namespace

// ---------------------------------------------------------------------------
// Strain wells
// ---------------------------------------------------------------------------

Strain2 strain_well(int n, int j) {
  check_n(n);
  if (j < 1 || j > 2 * n) throw std::invalid_argument("strain well index out of range");
  const double t = std::tan(kPi / n);
  Mat2 base{1.0, -t, -t, -1.0};
  int k = 0;
  if (j % 2 == 1) {
    k = (j - 1) / 2;
  } else {
    k = (j - 2) / 2;
    const Mat2 p = axis_flip();
    base = p * base * p;
  }
  const Mat2 q = rotation_step(n, k);
  const Mat2 e = q * base * q.transpose();
  return {e.a11, e.a12};
}

std::vector<Strain2> lin_well_set(int n) {
  check_n(n);
  const Mat2 anchor = strain_well(n, 1).matrix();
  std::vector<Mat2> group;
  group.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) group.push_back(rotation_step(n, k));
  for (int k = 0; k < n; ++k) group.push_back(reflection_at_angle(kPi * k / n));

  std::vector<Strain2> orbit;
  for (const Mat2& r : group) {
    const Mat2 image = r * anchor * r.transpose();
    bool fresh = true;
    for (const Strain2& seen : orbit) {
      if ((image - seen.matrix()).fnorm() <= 1e-10) {
        fresh = false;
        break;
      }
    }
    if (fresh) orbit.push_back({image.a11, image.a12});
  }
  return orbit;
}

int orbit_count(int n) { return static_cast<int>(lin_well_set(n).size()); }

// ---------------------------------------------------------------------------
// Finite-difference linearization
// ---------------------------------------------------------------------------

LinearizedShell linearized_map(int n, double h) {
  check_n(n);
  if (!(h > 0.0) || h > 1e-3) {
    throw std::invalid_argument("linearization step must satisfy 0 < h <= 1e-3");
  }

  const double alpha_plus = alpha_of_a(n, 1.0 + h);
  const double alpha_minus = alpha_of_a(n, 1.0 - h);
  const ShellGradients plus = shell_gradients(build_config(n, alpha_plus));
  const ShellGradients minus = shell_gradients(build_config(n, alpha_minus));
  const NGonConfig half = build_config(n, 0.5);

  const Vec2 e1 = half.e11;
  const Vec2 e2 = perp(e1);
  const Mat2 frame{e1.x, e2.x, e1.y, e2.y};
  const double inv_step = 1.0 / (2.0 * h);

  LinearizedShell out;
  out.n = n;
  out.h = h;
  out.quotients.reserve(2 * static_cast<std::size_t>(n));
  out.hat_strains.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= 2 * n; ++j) {
    const Mat2 d = inv_step * (plus.g[j - 1] - minus.g[j - 1]);
    out.quotients.push_back(d);
    const Mat2 hat = frame.transpose() * sym(d) * frame;
    out.hat_strains.push_back(hat);
    const double res = (hat - strain_well(n, j).matrix()).max_abs();
    if (res > out.strain_residual) out.strain_residual = res;
  }
  out.exterior_quotient = inv_step * (plus.outer_rotation - minus.outer_rotation);
  out.inner_quotient = inv_step * (plus.inner_rotation - minus.inner_rotation);
  out.exterior_sym_residual = sym(out.exterior_quotient).max_abs();
  out.inner_sym_residual = sym(out.inner_quotient).max_abs();

  // Jump of the difference quotients across each shared triangle edge must
  // be normal to the edge; measure the tangential component in the
  // undeformed (a = 1) geometry.
  const double vertex_tol = 1e-12 * half.r_outer;
  for (int j = 0; j < 2 * n; ++j) {
    const int nb = (j + 1) % (2 * n);
    const auto tri_a = half.triangle_vertices(j + 1);
    const auto tri_b = half.triangle_vertices(nb + 1);
    std::vector<Vec2> shared;
    for (const Vec2& p : tri_a) {
      for (const Vec2& q : tri_b) {
        if (norm(p - q) < vertex_tol) {
          shared.push_back(p);
          break;
        }
      }
    }
    if (shared.size() < 2) continue;
    const Vec2 edge = shared[1] - shared[0];
    const Vec2 t = (1.0 / norm(edge)) * edge;
    const Mat2 dd = out.quotients[j] - out.quotients[nb];
    const double jump = norm(dd.apply(t));
    if (jump > out.tangential_jump) out.tangential_jump = jump;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit symmetries of the strain wells
// ---------------------------------------------------------------------------

StrainSymmetryReport strain_orbit_symmetries(int n) {
  check_n(n);
  if (n % 2 == 0) {
    throw std::invalid_argument("strain orbit symmetries require odd n");
  }
  std::vector<Mat2> wells;
  wells.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= 2 * n; ++j) wells.push_back(strain_well(n, j).matrix());

  const Mat2 c = rotation_step(n, (n - 1) / 2) * axis_flip();
  StrainSymmetryReport report;
  report.anchor_residual = (c * wells[0] * c.transpose() - wells[0]).max_abs();
  for (int j = 0; j < 2 * n; ++j) {
    const Mat2 image = c * wells[j] * c.transpose();
    double best = (image - wells[0]).fnorm();
    for (const Mat2& w : wells) {
      const double d = (image - w).fnorm();
      if (d < best) best = d;
    }
    if (best > report.set_residual) report.set_residual = best;
    if ((image - wells[j]).max_abs() <= 1e-12) report.elementwise_fixed.push_back(j + 1);
  }

  const Mat2 half_step = rotation(kPi / n);
  const Mat2 q1 = rotation_step(n, 1);
  for (int j = 0; j < 2 * n; ++j) {
    const Mat2 lhs = half_step * wells[(j + 1) % (2 * n)] * half_step.transpose();
    const Mat2 rhs = q1 * wells[j] * q1.transpose();
    const double res = (lhs - rhs).max_abs();
    if (res > report.shift_residual) report.shift_residual = res;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Log-spiral vortex displacement
// ---------------------------------------------------------------------------

namespace {

double radius_squared_checked(Vec2 x) {
  const double r2 = x.x * x.x + x.y * x.y;
  if (r2 <= 0.0) throw std::invalid_argument("vortex displacement undefined at the origin");
  return r2;
}

}  // namespace

Vec2 log_vortex_value(Vec2 x) {
  const double r2 = radius_squared_checked(x);
  const double s = 2.0 * (1.0 - std::log(r2));
  return {s * x.y, -s * x.x};
}

Mat2 log_vortex_gradient(Vec2 x) {
  const double r2 = radius_squared_checked(x);
  const double s = 2.0 * (1.0 - std::log(r2));
  return {-4.0 * x.x * x.y / r2, s - 4.0 * x.y * x.y / r2,
          -s + 4.0 * x.x * x.x / r2, 4.0 * x.x * x.y / r2};
}

Mat2 log_vortex_strain(Vec2 x) {
  const double r2 = radius_squared_checked(x);
  const double scale = 4.0 / r2;
  const double off = 0.5 * scale * (x.x * x.x - x.y * x.y);
  return {-scale * x.x * x.y, off, off, scale * x.x * x.y};
}

double eikonal_residual(const Mat2& displacement_gradient, double m11, double m12) {
  const Mat2 e = sym(displacement_gradient);
  const double first = e.a11 + m11 - 0.25;
  const double second = e.a12 + m12;
  return first * first + second * second - 9.0 / 16.0;
}

BasisIndependence basis_independence_check(int n, double h) {
  const LinearizedShell shell = linearized_map(n, h);
  const NGonConfig half = build_config(n, 0.5);
  const Vec2 e1 = half.e11;
  const Vec2 e2 = perp(e1);
  const Mat2 frame{e1.x, e2.x, e1.y, e2.y};

  BasisIndependence out;
  for (int j = 1; j <= 2 * n; ++j) {
    const Mat2 s = sym(shell.quotients[j - 1]);
    const Mat2 well = strain_well(n, j).matrix();
    const double spoke = (frame.transpose() * s * frame - well).fnorm();
    const double lab = (s - frame * well * frame.transpose()).fnorm();
    if (spoke > out.strain_residual) out.strain_residual = spoke;
    const double gap = std::abs(spoke - lab);
    if (gap > out.basis_discrepancy) out.basis_discrepancy = gap;
  }
  return out;
}

}  // namespace ngonstar
