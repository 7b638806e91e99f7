#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ngonstar/rng.hpp"
#include "ngonstar/tetra3d.hpp"

namespace {

using namespace ngonstar;

constexpr double kPi = std::numbers::pi;

double sigma_min_of(const Simplex3& s) { return singular_values3(s.gradient)[0]; }

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::fabs(a.m[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)] -
                                        b.m[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)]));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("3x3 primitives") {
  // Rotation about z matches the planar rotation.
  const Mat3 rz = rotation_about(Vec3{0.0, 0.0, 2.0}, 0.7);  // axis normalized
  CHECK(rz.m[0][0] == doctest::Approx(std::cos(0.7)).epsilon(1e-14));
  CHECK(rz.m[0][1] == doctest::Approx(-std::sin(0.7)).epsilon(1e-14));
  CHECK(rz.m[2][2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rz.det() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)rotation_about(Vec3{0.0, 0.0, 0.0}, 0.3),
                  std::invalid_argument);

  // Singular values of a diagonal matrix come back sorted ascending.
  const Mat3 d = Mat3::from_columns(Vec3{3.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0},
                                    Vec3{0.0, 0.0, 2.0});
  const auto sv = singular_values3(d);
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(sv[2] == doctest::Approx(3.0).epsilon(1e-13));
  const auto svr = singular_values3(rotation_about(Vec3{1.0, 2.0, 0.5}, 1.1));
  for (double s : svr) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  // Barycentric containment.
  const std::array<Vec3, 4> tet = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                                   Vec3{0, 0, 1}};
  CHECK(tetra_contains(tet, Vec3{0.2, 0.2, 0.2}));
  CHECK(tetra_contains(tet, Vec3{0.0, 0.0, 0.0}));
  CHECK_FALSE(tetra_contains(tet, Vec3{0.5, 0.5, 0.5}));
}

TEST_CASE("construction layout") {
  const TetraConstruction c = build_x3(0.3, 0.2);
  REQUIRE(c.simplices.size() == 14);
  const auto& names = simplex_names();
  for (std::size_t i = 0; i < 14; ++i) {
    CHECK(c.simplices[i].name == names[i]);
    CHECK(c.simplices[i].volume > 0.0);
    // The affine data interpolates the vertex images exactly.
    for (int v = 0; v < 4; ++v) {
      const Vec3 mapped = c.simplices[i].gradient.apply(
                              c.simplices[i].domain[static_cast<std::size_t>(v)]) +
                          c.simplices[i].offset;
      const Vec3 want = c.simplices[i].image[static_cast<std::size_t>(v)];
      CHECK(norm3(mapped - want) <= 1e-12);
    }
  }
  CHECK(names[0] == "capA1");
  CHECK(names[4] == "capB1");
  CHECK(names[8] == "edge12");
  CHECK(names[13] == "edge34");
  // Outer vertices are the alternating-sign tetrahedron.
  CHECK(norm3(c.outer[0] - Vec3{1.0, 1.0, 1.0}) <= 1e-15);
  CHECK(norm3(c.outer[3] - Vec3{-1.0, -1.0, 1.0}) <= 1e-15);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS((void)build_x3(0.0, 0.2), std::invalid_argument);
  CHECK_THROWS_AS((void)build_x3(kPi / 2.0, 0.2), std::invalid_argument);
  CHECK_THROWS_AS((void)build_x3(0.3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)build_x3(0.3, 1.0 / 3.0), std::invalid_argument);
  // The vertex axis admits theta = 0 and negative twists.
  CHECK_NOTHROW((void)build_vertex(0.0, 0.2));
  CHECK_NOTHROW((void)build_vertex(-0.4, 0.2));
  CHECK_THROWS_AS((void)build_vertex(kPi / 2.0, 0.2), std::invalid_argument);
}

TEST_CASE("gap volumes tile exactly until the construction degenerates") {
  for (double theta : {0.3, 0.9, 1.5}) {
    const TetraConstruction c = build_x3(theta, 0.3);
    CHECK(c.tiling_ok);
    CHECK(c.tiling_residual <= 1e-12);
  }
  // The vertex twist eventually folds simplices over each other: the
  // unsigned volumes then overshoot the gap volume.
  CHECK(build_vertex(1.2, 0.3).tiling_ok);
  const TetraConstruction folded = build_vertex(1.5, 0.3);
  CHECK_FALSE(folded.tiling_ok);
  CHECK(folded.tiling_residual > 1e-3);
}

TEST_CASE("pinned singular values, x3 axis") {
  const TetraConstruction c = build_x3(0.3, 0.2);
  CHECK(sigma_min_of(c.simplices[0]) == doctest::Approx(0.711855076332).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[1]) == doctest::Approx(0.711855076332).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[4]) == doctest::Approx(0.767996965656).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[8]) == doctest::Approx(0.763130636376).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[10]) ==
        doctest::Approx(0.737415351928).epsilon(1e-10));  // edge14
  CHECK(sigma_min_of(c.simplices[11]) ==
        doctest::Approx(0.737415351928).epsilon(1e-10));  // edge23
  // All pieces are volume-preserving with middle singular value one.
  for (const auto& s : c.simplices) {
    CHECK(std::fabs(s.gradient.det() - 1.0) <= 1e-12);
    CHECK(std::fabs(singular_values3(s.gradient)[1] - 1.0) <= 1e-11);
  }
}

TEST_CASE("pinned singular values, vertex axis") {
  const TetraConstruction c = build_vertex(0.3, 0.2);
  // The two caps at the fixed vertex are exactly rigid: the identity and
  // the full twist.
  CHECK(max_abs_diff(c.simplices[0].gradient, Mat3::identity()) <= 1e-12);
  CHECK(max_abs_diff(c.simplices[4].gradient, c.twist) <= 1e-12);
  CHECK(sigma_min_of(c.simplices[1]) == doctest::Approx(0.680540872526).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[5]) == doctest::Approx(0.735694492748).epsilon(1e-10));
  CHECK(sigma_min_of(c.simplices[8]) ==
        doctest::Approx(0.699151086984).epsilon(1e-10));  // edge12
  CHECK(sigma_min_of(c.simplices[11]) ==
        doctest::Approx(0.834159789801).epsilon(1e-10));  // edge23
}

TEST_CASE("x3 shear pieces expose the simple-shear frame") {
  const double theta = 0.3;
  const TetraConstruction c = build_x3(theta, 0.2);
  const double inv = 1.0 / std::sqrt(2.0);
  const Vec3 xp{inv, inv, 0.0}, yp{-inv, inv, 0.0}, e3{0.0, 0.0, 1.0};
  // edge14 in the frame (y', -x', e3) and edge23 in (x', y', e3) are both
  // the unit lower-triangular shear with off-diagonal 2 tan(theta).
  const Mat3 f14 = Mat3::from_columns(yp, Vec3{-xp.x, -xp.y, -xp.z}, e3);
  const Mat3 f23 = Mat3::from_columns(xp, yp, e3);
  const Mat3 s14 = f14.transpose() * c.simplices[10].gradient * f14;
  const Mat3 s23 = f23.transpose() * c.simplices[11].gradient * f23;
  Mat3 shear = Mat3::identity();
  shear.m[1][0] = 2.0 * std::tan(theta);
  CHECK(max_abs_diff(s14, shear) <= 1e-12);
  CHECK(max_abs_diff(s23, shear) <= 1e-12);
  CHECK(shear.m[1][0] == doctest::Approx(0.618672499219).epsilon(1e-10));
}

TEST_CASE("gradients approach the identity as the twist vanishes") {
  for (const TetraConstruction& c :
       {build_x3(1e-9, 0.15), build_vertex(1e-9, 0.15)}) {
    double worst = 0.0;
    for (const auto& s : c.simplices) {
      worst = std::max(worst, max_abs_diff(s.gradient, Mat3::identity()));
    }
    CHECK(worst <= 1e-6);
  }
  // Small but finite twist: the disparity of sigma_min collapses, which is
  // what keeps the x3 scan's minimum below threshold near theta -> 0.
  const TetraConstruction tiny = build_x3(1e-6, 0.15);
  double lo = 1e300, hi = -1e300;
  for (const auto& s : tiny.simplices) {
    lo = std::min(lo, sigma_min_of(s));
    hi = std::max(hi, sigma_min_of(s));
  }
  CHECK(hi - lo <= 1e-6);
  CHECK(hi - lo >= 1e-8);
  CHECK(hi - lo == doctest::Approx(3.3196e-7).epsilon(1e-3));
}

TEST_CASE("gap simplices cover the gap exactly once") {
  Rng rng(55);
  const TetraConstruction c = build_x3(0.4, 0.22);
  int tested = 0;
  for (int i = 0; i < 4000 && tested < 500; ++i) {
    const Vec3 p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                 rng.uniform(-1.0, 1.0)};
    if (!tetra_contains(c.outer, p) || tetra_contains(c.inner, p)) continue;
    ++tested;
    int containing = 0;
    for (const auto& s : c.simplices) {
      if (tetra_contains(s.domain, p)) ++containing;
    }
    CHECK(containing == 1);
  }
  CHECK(tested == 500);
}

TEST_CASE("scan aggregates and pinned minima") {
  const TetraScanResult x3 = scan_singular_values(TetraAxis::X3, 50, 50);
  CHECK(x3.thetas.size() == 50);
  CHECK(x3.rs.size() == 50);
  CHECK(x3.cells.size() == 2500);
  CHECK(x3.worst_det_residual <= 1e-12);
  CHECK(x3.worst_sigma_mid_residual <= 1e-10);
  CHECK(x3.worst_austenite_residual <= 1e-12);
  CHECK(x3.min_disparity == doctest::Approx(0.006286).epsilon(1e-3));

  const TetraScanResult vx = scan_singular_values(TetraAxis::Vertex, 50, 50);
  CHECK(vx.worst_det_residual <= 1e-12);
  CHECK(vx.worst_sigma_mid_residual <= 1e-10);
  CHECK(vx.worst_austenite_residual <= 1e-12);
  CHECK(vx.min_disparity == doctest::Approx(0.024641).epsilon(1e-3));

  // Rows below the small-angle boundary are the only ones whose best
  // disparity dips under 1e-2 on the x3 axis.
  for (std::size_t it = 0; it < x3.thetas.size(); ++it) {
    double row_min = 1e300;
    for (std::size_t ir = 0; ir < x3.rs.size(); ++ir) {
      row_min = std::min(row_min, x3.cells[it * x3.rs.size() + ir].disparity);
    }
    if (x3.thetas[it] < 0.0816) {
      CHECK(row_min < 1e-2);
    } else {
      CHECK(row_min >= 1e-2);
    }
  }
}

TEST_CASE("scan minima are stable under grid refinement") {
  for (TetraAxis axis : {TetraAxis::X3, TetraAxis::Vertex}) {
    const double m10 = scan_singular_values(axis, 10, 10).min_disparity;
    const double m50 = scan_singular_values(axis, 50, 50).min_disparity;
    const double m100 = scan_singular_values(axis, 100, 100).min_disparity;
    const double lo = std::min({m10, m50, m100});
    const double hi = std::max({m10, m50, m100});
    CHECK((hi - lo) / hi <= 0.05);
  }
}

TEST_CASE("scan window validation") {
  CHECK_THROWS_AS((void)scan_singular_values(TetraAxis::X3, 0, 5),
                  std::invalid_argument);
  const TetraScanWindow reversed{0.4, 0.2, 0.05, 0.3};
  CHECK_THROWS_AS((void)scan_singular_values(TetraAxis::X3, 5, 5, reversed),
                  std::invalid_argument);
  const TetraScanWindow outside{0.1, 2.0, 0.05, 0.3};  // theta_max too large
  CHECK_THROWS_AS((void)scan_singular_values(TetraAxis::X3, 5, 5, outside),
                  std::invalid_argument);
}
