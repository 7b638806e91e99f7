#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ngonstar/linalg2.hpp"
#include "ngonstar/rng.hpp"

namespace {

using namespace ngonstar;

constexpr double kPi = std::numbers::pi;

Mat2 random_matrix(Rng& rng, double lo, double hi) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi),
          rng.uniform(lo, hi)};
}

}  // namespace

TEST_CASE("vector primitives") {
  CHECK(dot(Vec2{1.0, 2.0}, Vec2{3.0, -1.0}) == doctest::Approx(1.0));
  CHECK(cross(Vec2{1.0, 0.0}, Vec2{0.0, 1.0}) == doctest::Approx(1.0));
  const Vec2 p = perp(Vec2{1.0, 0.0});
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(1.0));
  CHECK(angle_of(Vec2{0.0, 2.0}) == doctest::Approx(kPi / 2.0));
  CHECK(norm(Vec2{3.0, 4.0}) == doctest::Approx(5.0));
}

TEST_CASE("rotations and reflections") {
  const Mat2 q = rotation(0.7);
  CHECK((q * q.transpose() - Mat2::identity()).max_abs() <= 1e-15);
  CHECK(q.det() == doctest::Approx(1.0));
  CHECK(rotation_angle(q) == doctest::Approx(0.7));

  const Mat2 p = reflection_at_angle(0.4);
  CHECK((p - p.transpose()).max_abs() <= 1e-15);
  CHECK(p.det() == doctest::Approx(-1.0));
  // The axis direction is fixed.
  const Vec2 axis{std::cos(0.4), std::sin(0.4)};
  CHECK(norm(p.apply(axis) - axis) <= 1e-15);

  // reflection_about agrees with reflection_at_angle on a unit axis.
  const Mat2 p2 = reflection_about(axis);
  CHECK((p - p2).max_abs() <= 1e-15);
  CHECK_THROWS_AS((void)reflection_about(Vec2{1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("svd2 reconstructs random matrices") {
  Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Mat2 m = random_matrix(rng, -10.0, 10.0);
    const SVD2 s = svd2(m);
    CHECK(s.sigma1 >= s.sigma2);
    CHECK(s.sigma2 >= 0.0);
    CHECK(std::fabs(s.sigma1 * s.sigma2 - std::fabs(m.det())) <=
          1e-12 * std::max(1.0, std::fabs(m.det())));
    const double res = (s.reconstruct() - m).max_abs();
    worst = std::max(worst, res / std::max(1.0, s.sigma1));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("svd2 degenerate inputs take the fixed tie-break") {
  // Scalar multiple of a rotation.
  const Mat2 r = 3.0 * rotation(1.1);
  const SVD2 sr = svd2(r);
  CHECK(sr.left_angle == 0.0);
  CHECK(sr.sigma1 == doctest::Approx(3.0));
  CHECK(sr.sigma2 == doctest::Approx(3.0));
  CHECK((sr.reconstruct() - r).max_abs() <= 1e-14);

  // Scalar multiple of a reflection.
  const Mat2 f = 2.0 * reflection_at_angle(0.3);
  const SVD2 sf = svd2(f);
  CHECK(sf.left_angle == 0.0);
  CHECK(sf.det_sign == -1);
  CHECK((sf.reconstruct() - f).max_abs() <= 1e-14);

  // Zero matrix.
  const SVD2 sz = svd2(Mat2{});
  CHECK(sz.sigma1 == 0.0);
  CHECK(sz.sigma2 == 0.0);
}

TEST_CASE("rotation-coset distance matches a brute-force angle grid") {
  Rng rng(77);
  for (int i = 0; i < 8; ++i) {
    const Mat2 f = random_matrix(rng, -2.0, 2.0);
    const Mat2 m = random_matrix(rng, -2.0, 2.0);
    const double fast = dist_to_rotation_coset(f, m);
    double brute = std::numeric_limits<double>::infinity();
    const int steps = 200000;
    for (int k = 0; k < steps; ++k) {
      const double t = 2.0 * kPi * k / steps;
      brute = std::min(brute, (f - rotation(t) * m).fnorm());
    }
    CHECK(fast <= brute + 1e-12);
    CHECK(brute - fast <= 1e-6);
  }
}

TEST_CASE("rotation-coset distance vanishes on the coset without cancellation") {
  Rng rng(78);
  for (int i = 0; i < 100; ++i) {
    const Mat2 m = random_matrix(rng, -3.0, 3.0);
    const Mat2 f = rotation(rng.uniform(-kPi, kPi)) * m;
    CHECK(dist_to_rotation_coset(f, m) <= 1e-13 * std::max(1.0, m.fnorm()));
  }
}

TEST_CASE("polar decomposition") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = random_matrix(rng, -2.0, 2.0);
    if (m.det() <= 0.0) m = m * Mat2{-1.0, 0.0, 0.0, 1.0};  // flip a column
    if (!(m.det() > 1e-6)) continue;
    const Polar2 p = polar_decompose(m);
    CHECK((p.rotation_factor * p.rotation_factor.transpose() - Mat2::identity())
              .max_abs() <= 1e-14);
    CHECK(p.rotation_factor.det() == doctest::Approx(1.0));
    CHECK((p.stretch - p.stretch.transpose()).max_abs() <= 1e-14);
    CHECK((p.rotation_factor * p.stretch - m).max_abs() <= 1e-12);
  }
  CHECK_THROWS_AS((void)polar_decompose(Mat2{1.0, 0.0, 0.0, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("pinned rng mapping") {
  // The bits-to-double mapping is part of the reproducibility contract.
  Rng rng(7);
  const double first = rng.uniform();
  Rng rng2(7);
  CHECK(rng2.uniform() == first);
  CHECK(first >= 0.0);
  CHECK(first < 1.0);
}
