#include "ngonstar/single_layer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ngonstar/wells.hpp"

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

// Rotation angle carrying `d` onto `img` (both nonzero).
double turning_angle(Vec2 d, Vec2 img) {
  return std::atan2(cross(d, img), dot(d, img));
}

double wrap_pi(double t) {
  t = std::fmod(t + kPi, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t - kPi;
}

// Signed containment defect of `x` in a convex polygon: the smallest signed
// distance to an edge line, positive inside, negative outside, handling
// either vertex orientation.
double containment_defect(const std::vector<Vec2>& poly, Vec2 x) {
  double area2 = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    area2 += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  const double sign = area2 >= 0.0 ? 1.0 : -1.0;
  double defect = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % poly.size()];
    const Vec2 d = b - a;
    defect = std::min(defect, sign * cross(d, x - a) / norm(d));
  }
  return defect;
}

double polygon_scale(const std::vector<Vec2>& poly) {
  double s = 0.0;
  for (const Vec2& v : poly) s = std::max(s, norm(v));
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shell gradients
// ---------------------------------------------------------------------------

ShellGradients shell_gradients(const NGonConfig& config) {
  const int n = config.n;
  const double a = stretch_a(n, config.alpha);
  const Vec2 e = config.e11;
  const Vec2 ep = perp(e);
  const Mat2 u = a * outer(e, e) + (1.0 / a) * outer(ep, ep) +
                 ((1.0 / a - a) / std::tan(config.phi)) * outer(e, ep);
  const Mat2 p0 = reflection_about(e);
  const Mat2 pup = p0 * u * p0;

  ShellGradients out;
  out.stretch = u;
  out.g.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) {
    const int k = (j % 2 == 1) ? (j - 1) / 2 : (j - 2) / 2;
    const Mat2 qk = rotation(2.0 * kPi * k / n);
    out.g.push_back(qk * (j % 2 == 1 ? u : pup) * qk.transpose());
  }

  // Outer rotation from the image of the first outer edge, inner rotation
  // from the image of the first inner edge.
  const Vec2 d_out = config.outer[1] - config.outer[0];
  out.outer_angle = turning_angle(d_out, out.g[1].apply(d_out));
  out.outer_rotation = rotation(out.outer_angle);
  const Vec2 d_in = config.inner[0] - config.inner[static_cast<std::size_t>(n - 1)];
  out.inner_angle = turning_angle(d_in, out.g[0].apply(d_in));
  out.inner_rotation = rotation(out.inner_angle);
  return out;
}

// ---------------------------------------------------------------------------
// Construction and evaluation
// ---------------------------------------------------------------------------

PiecewiseAffineMap build_single_layer(const NGonConfig& config, bool exterior_identity) {
  const int n = config.n;
  const ShellGradients sg = shell_gradients(config);

  PiecewiseAffineMap map;
  map.n = n;
  map.alpha = config.alpha;
  map.r_outer = config.r_outer;
  map.layers = 1;
  map.exterior_identity = exterior_identity;
  map.outer_rotation = sg.outer_rotation;
  map.inner_rotation = sg.inner_rotation;
  map.base = config;
  map.pieces.resize(static_cast<std::size_t>(2 * n + 2));

  AffinePiece& ext = map.pieces[0];
  ext.kind = PieceKind::Exterior;
  ext.layer = -1;
  ext.gradient = sg.outer_rotation;
  ext.offset = {0.0, 0.0};
  ext.polygon = config.outer;

  // Chain offsets from the exterior: even triangles share their outer edge
  // with the exterior piece, odd triangles share a spoke with the next even
  // triangle, the core matches triangle 1 at the first inner vertex.
  for (int j = 2; j <= 2 * n; j += 2) {
    const int i = j / 2;
    AffinePiece& piece = map.pieces[static_cast<std::size_t>(j)];
    piece.kind = PieceKind::Shell;
    piece.layer = 0;
    piece.index = j;
    piece.gradient = sg.g[static_cast<std::size_t>(j - 1)];
    const Vec2 v = config.outer[static_cast<std::size_t>(i - 1)];
    piece.offset = sg.outer_rotation.apply(v) - piece.gradient.apply(v);
    const auto tri = config.triangle_vertices(j);
    piece.polygon.assign(tri.begin(), tri.end());
  }
  for (int j = 1; j <= 2 * n; j += 2) {
    const int i = (j + 1) / 2;
    AffinePiece& piece = map.pieces[static_cast<std::size_t>(j)];
    const AffinePiece& next = map.pieces[static_cast<std::size_t>(j + 1)];
    piece.kind = PieceKind::Shell;
    piece.layer = 0;
    piece.index = j;
    piece.gradient = sg.g[static_cast<std::size_t>(j - 1)];
    const Vec2 v = config.outer[static_cast<std::size_t>(i - 1)];
    piece.offset = next.apply(v) - piece.gradient.apply(v);
    const auto tri = config.triangle_vertices(j);
    piece.polygon.assign(tri.begin(), tri.end());
  }

  AffinePiece& core = map.pieces[static_cast<std::size_t>(2 * n + 1)];
  core.kind = PieceKind::Core;
  core.layer = 1;
  core.gradient = sg.inner_rotation;
  core.offset = map.pieces[1].apply(config.inner[0]) - core.gradient.apply(config.inner[0]);
  core.polygon = config.inner;

  if (exterior_identity) {
    const Mat2 rt = sg.outer_rotation.transpose();
    for (AffinePiece& piece : map.pieces) {
      piece.gradient = rt * piece.gradient;
      piece.offset = rt.apply(piece.offset);
    }
  }
  return map;
}

int locate_piece(const PiecewiseAffineMap& map, Vec2 x) {
  int best = 0;
  double best_defect = -std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < map.pieces.size(); ++idx) {
    const AffinePiece& piece = map.pieces[idx];
    const double eps = 1e-12 * polygon_scale(piece.polygon);
    double defect = containment_defect(piece.polygon, x);
    if (piece.kind == PieceKind::Exterior) defect = -defect;
    if (defect >= -eps) return static_cast<int>(idx);
    if (defect > best_defect) {
      best_defect = defect;
      best = static_cast<int>(idx);
    }
  }
  return best;  // closest piece; reachable only through rounding at corners
}

Vec2 evaluate(const PiecewiseAffineMap& map, Vec2 x) {
  return map.pieces[static_cast<std::size_t>(locate_piece(map, x))].apply(x);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

InterfaceCheck check_interfaces(const PiecewiseAffineMap& map) {
  InterfaceCheck out;
  for (const AffinePiece& piece : map.pieces) {
    out.det_residual = std::max(out.det_residual, std::fabs(piece.gradient.det() - 1.0));
  }
  const std::size_t count = map.pieces.size();
  for (std::size_t i = 0; i < count; ++i) {
    const AffinePiece& pi = map.pieces[i];
    const std::size_t ei = pi.polygon.size();
    for (std::size_t j = i + 1; j < count; ++j) {
      const AffinePiece& pj = map.pieces[j];
      const std::size_t ej = pj.polygon.size();
      const double tol = 1e-9 * std::max({polygon_scale(pi.polygon),
                                          polygon_scale(pj.polygon), 1e-300});
      for (std::size_t a = 0; a < ei; ++a) {
        const Vec2 a0 = pi.polygon[a];
        const Vec2 a1 = pi.polygon[(a + 1) % ei];
        for (std::size_t b = 0; b < ej; ++b) {
          const Vec2 b0 = pj.polygon[b];
          const Vec2 b1 = pj.polygon[(b + 1) % ej];
          const bool same = norm(a0 - b0) <= tol && norm(a1 - b1) <= tol;
          const bool flipped = norm(a0 - b1) <= tol && norm(a1 - b0) <= tol;
          if (!same && !flipped) continue;
          ++out.interfaces;
          out.continuity_residual =
              std::max({out.continuity_residual, norm(pi.apply(a0) - pj.apply(a0)),
                        norm(pi.apply(a1) - pj.apply(a1))});
          const Mat2 dg = pi.gradient - pj.gradient;
          if (dg.fnorm() > 1e-13) {
            const Vec2 t = (1.0 / norm(a1 - a0)) * (a1 - a0);
            out.rank_one_residual = std::max(out.rank_one_residual, norm(dg.apply(t)));
          }
        }
      }
    }
  }
  return out;
}

ConditionReport verify_conditions(const PiecewiseAffineMap& map, double tol) {
  if (map.pieces.size() < 3) {
    throw std::invalid_argument("verify_conditions: map has no shell pieces");
  }
  ConditionReport rep;
  rep.continuity_residual = check_interfaces(map).continuity_residual;

  const AffinePiece& ext = map.pieces.front();
  rep.exterior_residual = (ext.gradient - Mat2::identity()).fnorm() + norm(ext.offset);

  const std::vector<Mat2> wells =
      enumerate_wells(map.n, stretch_a(map.n, map.alpha));
  for (const AffinePiece& piece : map.pieces) {
    if (piece.kind != PieceKind::Shell) continue;
    rep.well_distance =
        std::max(rep.well_distance, membership_cauchy_green(piece.gradient, wells, tol).distance);
  }

  const AffinePiece& core = map.pieces.back();
  const double rho = (2.0 * kPi / map.n) * (1.0 - 2.0 * map.alpha);
  const double core_turn = rotation_angle(ext.gradient.transpose() * core.gradient);
  rep.inner_angle_residual = std::fabs(wrap_pi(core_turn - rho));

  const Vec2 i1 = map.base.inner[0];
  const Vec2 in = map.base.inner[static_cast<std::size_t>(map.n - 1)];
  const Vec2 target = ext.gradient.apply({i1.x, -i1.y});
  rep.flip_residual = norm(core.apply(in) - target);

  rep.pass = rep.continuity_residual <= tol && rep.exterior_residual <= tol &&
             rep.well_distance <= tol && rep.inner_angle_residual <= tol &&
             rep.flip_residual <= tol;
  return rep;
}

double reflection_conjugation_residual(int n, double alpha) {
  const NGonConfig cfg = build_config(n, alpha);
  const ShellGradients sg = shell_gradients(cfg);
  const Mat2 p0 = reflection_about(cfg.e11);
  const Mat2 lhs = p0 * sg.stretch * p0;
  const Mat2 rhs = rotation(2.0 * kPi * alpha / n) * sg.stretch *
                   rotation(2.0 * kPi * (1.0 - alpha) / n).transpose();
  return (lhs - rhs).fnorm();
}

double beta0_angle(int n, double a) {
  if (n < 3 || !(a > 0.0)) {
    throw std::invalid_argument("beta0_angle: need n >= 3 and a > 0");
  }
  const double c = std::cos(kPi / n);
  const double s = std::sin(kPi / n);
  return std::asin((a * a - 1.0) * c / (1.0 + a * a + 2.0 * a * s));
}

}  // namespace ngonstar
