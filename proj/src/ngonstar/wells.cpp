#include "ngonstar/wells.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ngonstar/ngon_geometry.hpp"

namespace ngonstar {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---------------------------------------------------------------------------
// Transformation stretch
// ---------------------------------------------------------------------------

WellMatrix bain_matrix(int n, double a) {
  if (n < 3) {
    throw std::invalid_argument("polygon side count must be at least 3");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("stretch ratio must be positive");
  }

  WellMatrix well;
  well.n = n;
  well.a = a;
  well.alpha = alpha_of_a(n, a);

  const NGonConfig cfg = build_config(n, well.alpha);
  well.e11 = cfg.e11;
  const Vec2 e_perp = perp(cfg.e11);
  well.matrix = a * outer(cfg.e11, cfg.e11) + (1.0 / a) * outer(e_perp, e_perp) +
                ((1.0 / a - a) / std::tan(cfg.phi)) * outer(cfg.e11, e_perp);
  return well;
}

// ---------------------------------------------------------------------------
// Symmetry group and well set
// ---------------------------------------------------------------------------

std::vector<Mat2> symmetry_group(int n, const Vec2& e11) {
  if (n < 3) {
    throw std::invalid_argument("polygon side count must be at least 3");
  }
  if (std::fabs(norm(e11) - 1.0) > 1e-12) {
    throw std::invalid_argument("spoke direction must be a unit vector");
  }
  const double t0 = angle_of(e11);
  std::vector<Mat2> group;
  group.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    group.push_back(rotation(2.0 * kPi * k / n));
  }
  for (int k = 0; k < n; ++k) {
    group.push_back(reflection_at_angle(t0 + kPi * k / n));
  }
  return group;
}

std::vector<Mat2> enumerate_wells(int n, double a, double tol) {
  const WellMatrix well = bain_matrix(n, a);
  const std::vector<Mat2> group = symmetry_group(n, well.e11);

  std::vector<Mat2> kept;
  std::vector<Mat2> kept_cg;
  kept.reserve(group.size());
  for (const Mat2& p : group) {
    const Mat2 candidate = p * well.matrix * p.transpose();
    const Mat2 cg = candidate.transpose() * candidate;
    bool duplicate = false;
    for (const Mat2& seen : kept_cg) {
      if ((cg - seen).fnorm() <= tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back(candidate);
      kept_cg.push_back(cg);
    }
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Membership queries
// ---------------------------------------------------------------------------

MembershipReport membership_cauchy_green(const Mat2& f, const std::vector<Mat2>& wells,
                                         double tol) {
  MembershipReport report;
  if (!(f.det() > 0.0)) {
    report.applicable = false;
    return report;
  }
  const Mat2 cg = f.transpose() * f;
  for (const Mat2& w : wells) {
    const Mat2 wcg = w.transpose() * w;
    report.distance = std::min(report.distance, (cg - wcg).fnorm());
  }
  report.member = report.distance <= tol;
  return report;
}

MembershipReport limit_membership(const Mat2& f, double a, double tol) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("stretch ratio must be positive");
  }
  const double hi = std::max(a, 1.0 / a);
  const double lo = std::min(a, 1.0 / a);
  const SVD2 sv = svd2(f);
  MembershipReport report;
  report.distance = std::max({std::fabs(f.det() - 1.0), std::fabs(sv.sigma1 - hi),
                              std::fabs(sv.sigma2 - lo)});
  report.member = report.distance <= tol;
  return report;
}

double min_coset_distance(const Mat2& f, const std::vector<Mat2>& wells) {
  double best = std::numeric_limits<double>::infinity();
  for (const Mat2& w : wells) {
    best = std::min(best, dist_to_rotation_coset(f, w));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Director and anisotropy
// ---------------------------------------------------------------------------

Director director(const Mat2& f) {
  Director d;
  const SVD2 sv = svd2(f);
  if (sv.sigma1 - sv.sigma2 <= 1e-12 * std::max(1.0, sv.sigma1)) {
    d.degenerate = true;
    return d;
  }
  const Mat2 b = f * f.transpose();
  double angle = 0.5 * std::atan2(2.0 * b.a12, b.a11 - b.a22);
  angle = std::fmod(angle, kPi);
  if (angle < 0.0) angle += kPi;
  d.angle = angle;
  return d;
}

NLCEWellParams nlce_well_params(double anisotropy) {
  if (!(anisotropy > 0.0)) {
    throw std::invalid_argument("anisotropy parameter must be positive");
  }
  NLCEWellParams params;
  params.anisotropy = anisotropy;
  params.major_stretch = std::pow(anisotropy, 1.0 / 3.0);
  params.minor_stretch = std::pow(anisotropy, -1.0 / 6.0);
  params.planar_det = params.major_stretch * params.minor_stretch;
  params.planar_normalization = std::pow(anisotropy, -1.0 / 12.0);
  return params;
}

double nlce_anisotropy(int n, double alpha) {
  const double a = stretch_a(n, alpha);
  const WellMatrix well = bain_matrix(n, a);
  const SVD2 sv = svd2(well.matrix);
  const double r = std::pow(sv.sigma1, 4.0);

  // Every well shares the singular values (sigma1, 1/sigma1) of the stretch,
  // so the whole well set must sit inside the matching limit set.
  for (const Mat2& w : enumerate_wells(n, a)) {
    if (!limit_membership(w, sv.sigma1, 1e-9).member) {
      throw std::logic_error("well set escapes its enclosing limit set");
    }
  }
  return r;
}

}  // namespace ngonstar
