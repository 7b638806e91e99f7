#include "ngonstar/ngon_geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(int n, double alpha) {
  if (n < 3) {
    throw std::invalid_argument("polygon side count must be at least 3");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in the open interval (0, 1)");
  }
}

// Half the inner-rotation mismatch angle: pi*(1-2*alpha)/n.
double half_rho(int n, double alpha) { return kPi * (1.0 - 2.0 * alpha) / n; }

}  // namespace

// ---------------------------------------------------------------------------
// Closed-form relations
// ---------------------------------------------------------------------------

double radius_ratio(int n, double alpha) {
  check_domain(n, alpha);
  const double s = std::sin(2.0 * kPi * alpha / n) * std::sin(2.0 * kPi * (1.0 - alpha) / n);
  return (std::cos(half_rho(n, alpha)) - std::sqrt(s)) / std::cos(kPi / n);
}

double stretch_a(int n, double alpha) {
  check_domain(n, alpha);
  return std::sqrt(std::sin(2.0 * kPi * (1.0 - alpha) / n) / std::sin(2.0 * kPi * alpha / n));
}

double alpha_of_a(int n, double a) {
  if (n < 3) {
    throw std::invalid_argument("polygon side count must be at least 3");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("stretch ratio must be positive");
  }
  const double th = 2.0 * kPi / n;
  return (n / (2.0 * kPi)) * std::atan2(std::sin(th), a * a + std::cos(th));
}

NGonConfig build_config(int n, double alpha, double r_outer) {
  check_domain(n, alpha);
  if (!(r_outer > 0.0)) {
    throw std::invalid_argument("outer radius must be positive");
  }

  NGonConfig cfg;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.r_outer = r_outer;
  cfg.r_inner = r_outer * radius_ratio(n, alpha);
  cfg.near_degenerate = (cfg.r_inner / cfg.r_outer) < 1e-6;
  cfg.phi = (n - 2) * kPi / (2.0 * n);

  cfg.outer.reserve(static_cast<std::size_t>(n));
  cfg.inner.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double base = 2.0 * kPi * (i - 1) / n;
    cfg.outer.push_back({r_outer * std::cos(base), r_outer * std::sin(base)});
    const double rot = base + 2.0 * kPi * alpha / n;
    cfg.inner.push_back({cfg.r_inner * std::cos(rot), cfg.r_inner * std::sin(rot)});
  }

  // Combined vertex indexing: outer i -> i-1, inner i -> n + i - 1.
  cfg.triangles.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) {
    if (j % 2 == 1) {
      // Inner-edge triangle (E_i, I_{i-1}, I_i) with I_0 = I_n.
      const int i = (j + 1) / 2;
      const int prev = (i - 2 + n) % n;  // 0-based index of I_{i-1}
      cfg.triangles.push_back({i - 1, n + prev, n + i - 1});
    } else {
      // Outer-edge triangle (E_i, I_i, E_{i+1}) with E_{n+1} = E_1.
      const int i = j / 2;
      cfg.triangles.push_back({i - 1, n + i - 1, i % n});
    }
  }

  cfg.l1 = norm(cfg.outer[0] - cfg.inner[static_cast<std::size_t>(n - 1)]);
  cfg.l2 = norm(cfg.outer[0] - cfg.inner[0]);
  cfg.a = cfg.l1 / cfg.l2;
  cfg.e11 = (1.0 / cfg.l2) * (cfg.inner[0] - cfg.outer[0]);
  cfg.en1 = (1.0 / cfg.l1) * (cfg.inner[static_cast<std::size_t>(n - 1)] - cfg.outer[0]);
  return cfg;
}

double triangle_area(const std::array<Vec2, 3>& t) {
  return 0.5 * cross(t[1] - t[0], t[2] - t[0]);
}

double tiling_residual(const NGonConfig& config) {
  double covered = 0.0;
  for (int j = 1; j <= 2 * config.n; ++j) {
    covered += std::fabs(triangle_area(config.triangle_vertices(j)));
  }
  const double ring = 0.5 * config.n * std::sin(2.0 * kPi / config.n) *
                      (config.r_outer * config.r_outer - config.r_inner * config.r_inner);
  return std::fabs(covered - ring) / ring;
}

// ---------------------------------------------------------------------------
// Quartic-root analysis
// ---------------------------------------------------------------------------

namespace {

// Quadratic factor whose sign decides admissibility of a candidate root.
double linear_factor(int n, double alpha, double x) {
  return 1.0 + x * x * std::cos(2.0 * kPi / n) -
         2.0 * x * std::cos(kPi / n) * std::cos(half_rho(n, alpha));
}

// Squared left-hand side cos^2(phi) * q1(x) * q2(x) of the compatibility
// relation.
double squared_lhs(int n, double alpha, double x) {
  const double q1 = 1.0 + x * x - 2.0 * x * std::cos(2.0 * kPi * alpha / n);
  const double q2 = 1.0 + x * x - 2.0 * x * std::cos(2.0 * kPi * (1.0 - alpha) / n);
  const double cphi = std::cos((n - 2) * kPi / (2.0 * n));
  return cphi * cphi * q1 * q2;
}

QuarticRootReport::Root classify(int n, double alpha, double value) {
  QuarticRootReport::Root root;
  root.value = value;
  root.is_real = std::isfinite(value);
  if (!root.is_real) return root;
  root.in_unit_interval = value > 0.0 && value < 1.0;
  const double lhs = std::sqrt(std::max(squared_lhs(n, alpha, value), 0.0));
  const double rhs = linear_factor(n, alpha, value);
  root.satisfies_relation = std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(rhs));
  return root;
}

}  // namespace

QuarticRootReport quartic_roots(int n, double alpha) {
  check_domain(n, alpha);
  const double c1 = std::cos(kPi / n);
  const double c2 = std::cos(2.0 * kPi / n);
  const double c3 = std::cos(3.0 * kPi / n);
  const double ch = std::cos(half_rho(n, alpha));
  const double s = std::sin(2.0 * kPi * alpha / n) * std::sin(2.0 * kPi * (1.0 - alpha) / n);
  const double sq12 = std::sqrt(s);

  QuarticRootReport report;
  report.roots[0] = classify(n, alpha, (ch - sq12) / c1);
  report.roots[1] = classify(n, alpha, (ch + sq12) / c1);

  // Second quadratic factor c3 x^2 - 2 (c2 ch) x + c1.  The smaller root is
  // evaluated through the product-of-roots form c1 / (A + sqrt(D)): the
  // difference form (A - sqrt(D)) / c3 cancels catastrophically as c3 -> 0
  // (n = 6 has c3 = 0 exactly).
  const double big_a = c2 * ch;
  const double disc = big_a * big_a - c3 * c1;
  const double inf = std::numeric_limits<double>::infinity();
  if (disc >= 0.0) {
    const double denom = big_a + std::sqrt(disc);
    report.roots[2] = classify(n, alpha, c1 / denom);
    report.roots[3] =
        classify(n, alpha, std::fabs(c3) < 1e-12 ? inf : denom / c3);
  } else {
    // Complex pair: flagged not-real rather than erroring.
    report.roots[2] = classify(n, alpha, std::numeric_limits<double>::quiet_NaN());
    report.roots[3] = classify(n, alpha, std::numeric_limits<double>::quiet_NaN());
  }

  for (int k = 0; k < 4; ++k) {
    if (report.roots[static_cast<std::size_t>(k)].admissible()) {
      ++report.admissible_count;
      report.admissible_index = k;
    }
  }
  return report;
}

ThirdRootCheck third_root_negativity(int n, double alpha) {
  if (n < 4) {
    throw std::invalid_argument("third-root check requires at least 4 sides");
  }
  const QuarticRootReport report = quartic_roots(n, alpha);
  ThirdRootCheck check;
  check.applicable = report.roots[2].is_real;
  if (check.applicable) {
    check.value = linear_factor(n, alpha, report.roots[2].value);
  }
  return check;
}

std::array<double, 5> quartic_coefficients(int n, double alpha) {
  check_domain(n, alpha);
  const double cphi = std::cos((n - 2) * kPi / (2.0 * n));
  const double cphi2 = cphi * cphi;
  const double ca = std::cos(2.0 * kPi * alpha / n);
  const double cb = std::cos(2.0 * kPi * (1.0 - alpha) / n);
  const double c2 = std::cos(2.0 * kPi / n);
  const double t = 2.0 * std::cos(kPi / n) * std::cos(half_rho(n, alpha));

  // cos^2(phi) * q1 * q2 expanded in ascending powers of x.
  std::array<double, 5> p{1.0, -2.0 * (ca + cb), 2.0 + 4.0 * ca * cb, -2.0 * (ca + cb), 1.0};
  for (double& c : p) c *= cphi2;
  // Minus the squared linear factor (1 - t x + c2 x^2)^2.
  p[0] -= 1.0;
  p[1] -= -2.0 * t;
  p[2] -= t * t + 2.0 * c2;
  p[3] -= -2.0 * t * c2;
  p[4] -= c2 * c2;
  return p;
}

}  // namespace ngonstar
