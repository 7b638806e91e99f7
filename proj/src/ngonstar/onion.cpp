#include "ngonstar/onion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ngonstar/wells.hpp"

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

double frac_distance(double x) { return std::fabs(x - std::round(x)); }

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

int default_layer_count(int n, double alpha) {
  const double ratio = radius_ratio(n, alpha);
  const int shells = static_cast<int>(std::ceil(std::log(0.5) / std::log(ratio)));
  return std::max(shells, 1) + 1;
}

PiecewiseAffineMap build_onion(int n, double alpha, int layers, bool exterior_identity) {
  if (layers < 1) layers = default_layer_count(n, alpha);
  const NGonConfig cfg = build_config(n, alpha);
  const PiecewiseAffineMap base = build_single_layer(cfg, /*exterior_identity=*/false);
  const ShellGradients sg = shell_gradients(cfg);
  const double r_in = cfg.r_inner / cfg.r_outer;
  const double rho = (2.0 * kPi / n) * (1.0 - 2.0 * alpha);
  const Mat2 re = sg.outer_rotation;
  const Mat2 ret = re.transpose();

  PiecewiseAffineMap map;
  map.n = n;
  map.alpha = alpha;
  map.r_outer = cfg.r_outer;
  map.layers = layers;
  map.exterior_identity = exterior_identity;
  map.outer_rotation = re;
  map.inner_rotation = re * rotation(rho * layers);
  map.base = cfg;
  map.pieces.reserve(static_cast<std::size_t>(2 * n * layers + 2));

  AffinePiece ext;
  ext.kind = PieceKind::Exterior;
  ext.layer = -1;
  ext.gradient = re;
  ext.offset = {0.0, 0.0};
  ext.polygon = cfg.outer;
  map.pieces.push_back(ext);

  for (int k = 0; k < layers; ++k) {
    const Mat2 rk = rotation(rho * k);
    const Mat2 qak = rotation(2.0 * kPi * alpha * k / n);
    const Mat2 qakt = qak.transpose();
    const Mat2 pre = re * rk * qak;
    const double scale = std::pow(r_in, k);
    for (int j = 1; j <= 2 * n; ++j) {
      AffinePiece piece;
      piece.kind = PieceKind::Shell;
      piece.layer = k;
      piece.index = j;
      const AffinePiece& seed = base.pieces[static_cast<std::size_t>(j)];
      piece.gradient = rk * qak * seed.gradient * qakt;
      piece.offset = scale * pre.apply(ret.apply(seed.offset));
      for (const Vec2& v : cfg.triangle_vertices(j)) {
        piece.polygon.push_back(scale * qak.apply(v));
      }
      map.pieces.push_back(piece);
    }
  }

  // Core: one rotation on the innermost polygon, glued to the last layer's
  // first triangle at its first inner vertex.
  AffinePiece core;
  core.kind = PieceKind::Core;
  core.layer = layers;
  core.gradient = re * rotation(rho * layers);
  {
    const int k = layers - 1;
    const Mat2 qak = rotation(2.0 * kPi * alpha * k / n);
    const double scale = std::pow(r_in, k);
    const AffinePiece& first =
        map.pieces[static_cast<std::size_t>(1 + 2 * n * k)];
    const Vec2 v = scale * qak.apply(cfg.inner[0]);
    core.offset = first.apply(v) - core.gradient.apply(v);
    const Mat2 qcore = rotation(2.0 * kPi * alpha * layers / n);
    const double core_scale = std::pow(r_in, layers);
    for (const Vec2& e : cfg.outer) {
      core.polygon.push_back(core_scale * qcore.apply(e));
    }
  }
  map.pieces.push_back(core);

  if (exterior_identity) {
    for (AffinePiece& piece : map.pieces) {
      piece.gradient = ret * piece.gradient;
      piece.offset = ret.apply(piece.offset);
    }
  }
  return map;
}

// ---------------------------------------------------------------------------
// Layer symmetry and iteration checks
// ---------------------------------------------------------------------------

LayerSymmetryReport verify_layer_symmetries(int n, double alpha) {
  const NGonConfig cfg = build_config(n, alpha);
  const ShellGradients sg = shell_gradients(cfg);
  const auto& g = sg.g;

  LayerSymmetryReport rep;
  if (n % 2 == 0) {
    for (int i = 1; i <= n; ++i) {
      const Mat2 diff = g[static_cast<std::size_t>(i - 1)] -
                        g[static_cast<std::size_t>(i + n - 1)];
      rep.parity_residual = std::max(rep.parity_residual, diff.max_abs());
    }
  } else {
    for (int i = 1; i <= 2 * n; i += 2) {
      const int partner = ((i + n - 1) % (2 * n)) + 1;
      const Mat2 diff = g[static_cast<std::size_t>(i - 1)] -
                        g[static_cast<std::size_t>(partner - 1)].transpose();
      rep.parity_residual = std::max(rep.parity_residual, diff.max_abs());
    }
  }

  const double rho = (2.0 * kPi / n) * (1.0 - 2.0 * alpha);
  const Mat2 rstar = rotation(rho);
  const Mat2 qa = rotation(2.0 * kPi * alpha / n);
  const Mat2 q1 = rotation(2.0 * kPi / n);
  for (int i = 1; i <= 2 * n; i += 2) {
    const Mat2 lhs = rstar * qa * g[static_cast<std::size_t>(i)] * qa.transpose();
    const Mat2 rhs = q1 * g[static_cast<std::size_t>(i - 1)] * q1.transpose();
    rep.iteration_residual = std::max(rep.iteration_residual, (lhs - rhs).max_abs());
  }
  return rep;
}

NoniterabilityGap noniterability_gap(int n, double alpha) {
  const NGonConfig cfg = build_config(n, alpha);
  const ShellGradients sg = shell_gradients(cfg);
  const std::vector<Mat2> wells = enumerate_wells(n, stretch_a(n, alpha));
  const double rho = (2.0 * kPi / n) * (1.0 - 2.0 * alpha);
  const Mat2 step = rotation(rho) * rotation(2.0 * kPi * alpha / n);
  const Mat2 qat = rotation(2.0 * kPi * alpha / n).transpose();

  NoniterabilityGap gap;
  gap.inner = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 2 * n; ++j) {
    const Mat2 iterated = step * sg.g[static_cast<std::size_t>(j - 1)] * qat;
    const double d = min_coset_distance(iterated, wells);
    if (j % 2 == 0) {
      gap.outer = std::max(gap.outer, d);
    } else {
      gap.inner = std::min(gap.inner, d);
      gap.inner_max = std::max(gap.inner_max, d);
    }
  }

  // Predicted major eigenvector of U^T U, stated in the spoke frame of e11.
  const double v_angle = angle_of(cfg.e11) + kPi * (alpha - 1.0) / n;
  const Vec2 v{std::cos(v_angle), std::sin(v_angle)};
  const Mat2 cg = sg.stretch.transpose() * sg.stretch;
  const Vec2 mv = cg.apply(v);
  const double lambda = dot(v, mv);
  gap.eigenvector_residual = norm(mv - lambda * v);
  return gap;
}

double mismatch_norm(int n, double alpha) {
  const NGonConfig cfg = build_config(n, alpha);
  const ShellGradients sg = shell_gradients(cfg);
  return (sg.stretch - sg.stretch.transpose()).fnorm() / std::sqrt(2.0);
}

// ---------------------------------------------------------------------------
// Energy accounting
// ---------------------------------------------------------------------------

double surface_energy(const PiecewiseAffineMap& map) {
  double total = 0.0;
  const std::size_t count = map.pieces.size();
  for (std::size_t i = 0; i < count; ++i) {
    const AffinePiece& pi = map.pieces[i];
    const std::size_t ei = pi.polygon.size();
    for (std::size_t j = i + 1; j < count; ++j) {
      const AffinePiece& pj = map.pieces[j];
      const std::size_t ej = pj.polygon.size();
      double scale = 1e-300;
      for (const Vec2& v : pi.polygon) scale = std::max(scale, norm(v));
      for (const Vec2& v : pj.polygon) scale = std::max(scale, norm(v));
      const double tol = 1e-9 * scale;
      for (std::size_t a = 0; a < ei; ++a) {
        const Vec2 a0 = pi.polygon[a];
        const Vec2 a1 = pi.polygon[(a + 1) % ei];
        for (std::size_t b = 0; b < ej; ++b) {
          const Vec2 b0 = pj.polygon[b];
          const Vec2 b1 = pj.polygon[(b + 1) % ej];
          const bool same = norm(a0 - b0) <= tol && norm(a1 - b1) <= tol;
          const bool flipped = norm(a0 - b1) <= tol && norm(a1 - b0) <= tol;
          if (!same && !flipped) continue;
          total += norm(a1 - a0) * (pi.gradient - pj.gradient).fnorm();
        }
      }
    }
  }
  return total;
}

EnergyReport energy_report(int n, double alpha, int layers) {
  if (layers < 1) layers = default_layer_count(n, alpha);
  const NGonConfig cfg = build_config(n, alpha);
  const ShellGradients sg = shell_gradients(cfg);
  const std::vector<Mat2> wells = enumerate_wells(n, stretch_a(n, alpha));
  const double r_in = cfg.r_inner / cfg.r_outer;
  const double rho = (2.0 * kPi / n) * (1.0 - 2.0 * alpha);
  const Mat2 eye = Mat2::identity();

  std::vector<double> areas;
  areas.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) {
    areas.push_back(std::fabs(triangle_area(cfg.triangle_vertices(j))));
  }

  EnergyReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.layers = layers;
  for (int k = 0; k < layers; ++k) {
    const Mat2 rk = rotation(rho * k);
    const Mat2 qak = rotation(2.0 * kPi * alpha * k / n);
    const Mat2 qakt = qak.transpose();
    const double weight = std::pow(r_in, 2.0 * k);
    LayerEnergy layer;
    layer.layer = k;
    for (int j = 1; j <= 2 * n; ++j) {
      const Mat2 a = rk * qak * sg.g[static_cast<std::size_t>(j - 1)] * qakt;
      const double d = std::min(min_coset_distance(a, wells), dist_to_rotation_coset(a, eye));
      layer.elastic += weight * areas[static_cast<std::size_t>(j - 1)] * d * d;
    }
    if (k >= 1) {
      layer.bound_term = weight * frac_distance(2.0 * k * alpha);
    }
    rep.elastic += layer.elastic;
    rep.bound += layer.bound_term;
    rep.per_layer.push_back(layer);
  }
  rep.surface = surface_energy(build_onion(n, alpha, layers));
  rep.ratio = rep.bound > 0.0 ? rep.elastic / rep.bound : 0.0;
  return rep;
}

}  // namespace ngonstar
