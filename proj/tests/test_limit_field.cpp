#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ngonstar/limit_field.hpp"
#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/rng.hpp"
#include "ngonstar/single_layer.hpp"
#include "ngonstar/wells.hpp"

namespace {

using namespace ngonstar;

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("limit parameters") {
  const LimitParams p = limit_params(0.2);
  CHECK(p.a == doctest::Approx(2.0).epsilon(1e-14));  // sqrt(0.8/0.2)
  CHECK(p.rho0 == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(p.beta0 == doctest::Approx(std::asin(0.6)).epsilon(1e-14));
  CHECK(norm(p.e) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.e.x == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));
  CHECK(p.e.y == doctest::Approx(-std::sqrt(0.2)).epsilon(1e-14));
  // The symmetric point is rotation-free.
  const LimitParams sym = limit_params(0.5);
  CHECK(sym.a == doctest::Approx(1.0));
  CHECK(sym.rho0 == doctest::Approx(0.0));
  CHECK(sym.beta0 == doctest::Approx(0.0));
  CHECK_THROWS_AS((void)limit_params(0.0), std::invalid_argument);
}

TEST_CASE("gradient branches and determinant") {
  const double alpha = 0.2;
  const LimitParams p = limit_params(alpha);
  // Outside the unit disk: the constant exterior rotation.
  CHECK((limit_gradient(alpha, Vec2{1.5, 0.7}) - rotation(p.beta0)).max_abs() <= 1e-14);
  // Inside radius 1/2: the constant core rotation.
  const Mat2 core = rotation(p.beta0) * rotation(p.rho0 * std::log(0.5));
  CHECK((limit_gradient(alpha, Vec2{0.1, -0.2}) - core).max_abs() <= 1e-13);
  // On the annulus the gradient is unimodular and lies in the limit set.
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const double r = rng.uniform(0.5, 1.0);
    const double t = rng.uniform(0.0, 2.0 * kPi);
    const Mat2 g = limit_gradient(alpha, Vec2{r * std::cos(t), r * std::sin(t)});
    CHECK(std::fabs(g.det() - 1.0) <= 1e-12);
    const MembershipReport rep = limit_membership(g, p.a, 1e-12);
    CHECK(rep.member);
  }
  CHECK_THROWS_AS((void)limit_gradient(alpha, Vec2{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("deformation pinned value and norm preservation") {
  // At alpha = 0.2 the unit point (1, 0) maps to (0.8, 0.6) exactly.
  const Vec2 v = limit_deformation(0.2, Vec2{1.0, 0.0});
  CHECK(v.x == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(v.y == doctest::Approx(0.6).epsilon(1e-14));
  // |v(x)| = |x| across the annulus.
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const double r = rng.uniform(0.5, 1.0);
    const double t = rng.uniform(0.0, 2.0 * kPi);
    const Vec2 x{r * std::cos(t), r * std::sin(t)};
    CHECK(std::fabs(norm(limit_deformation(0.2, x)) - norm(x)) <= 1e-12);
  }
  // Outside the closed annulus the deformation is undefined.
  CHECK_THROWS_AS((void)limit_deformation(0.2, Vec2{0.49, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)limit_deformation(0.2, Vec2{1.01, 0.0}), std::invalid_argument);
}

TEST_CASE("analytic gradient matches finite differences") {
  CHECK(verify_gradient_consistency(0.2, 200, 1e-5, 7) <= 1e-8);
  CHECK(verify_gradient_consistency(0.35, 200, 1e-5, 8) <= 1e-8);
}

TEST_CASE("tangential continuity at the unit circle") {
  CHECK(interface_tangential_jump(0.2) <= 1e-10);
  CHECK(interface_tangential_jump(0.35) <= 1e-10);
}

TEST_CASE("winding matches the layer count asymptotically") {
  // The per-layer turning rho_n = 2 pi (1-2 alpha)/n times the number of
  // layers needed to halve the radius approaches rho0 * log(1/2).
  for (double alpha : {0.2, 0.35}) {
    const LimitParams p = limit_params(alpha);
    const double target = p.rho0 * std::log(0.5);
    for (int n : {50, 200, 800}) {
      const double rho_n = (2.0 * kPi / n) * (1.0 - 2.0 * alpha);
      const double layers = std::ceil(std::log(0.5) / std::log(radius_ratio(n, alpha)));
      const double winding = rho_n * layers;
      const double bound = (n == 800) ? 3e-3 : 2e-2;
      CHECK(std::fabs(winding - target) <= bound);
    }
  }
  // The exterior rotation of the finite shell approaches beta0.
  for (double alpha : {0.2, 0.35}) {
    const double beta_limit = limit_params(alpha).beta0;
    const double at50 =
        shell_gradients(build_config(50, alpha)).outer_angle;
    const double at200 =
        shell_gradients(build_config(200, alpha)).outer_angle;
    CHECK(std::fabs(at50 - beta_limit) <= 0.04);
    CHECK(std::fabs(at200 - beta_limit) <= 0.01);
    CHECK(std::fabs(at200 - beta_limit) < std::fabs(at50 - beta_limit));
  }
}

TEST_CASE("finite-n shell fields converge to the limit gradient") {
  // Deterministic regression against the pinned run: seed 99, 300 samples.
  const ConvergenceResult conv = convergence_test(0.2, {25, 50, 100, 200}, 300, 99);
  REQUIRE(conv.errors.size() == 4);
  CHECK(conv.samples == 300);
  const double pinned[] = {0.387803661191, 0.193735795110, 0.097323138681,
                           0.047936650768};
  for (int i = 0; i < 4; ++i) {
    CHECK(conv.errors[static_cast<std::size_t>(i)] ==
          doctest::Approx(pinned[i]).epsilon(1e-9));
  }
  // First-order decay: halving 1/n halves the error.
  CHECK(conv.errors[3] <= conv.errors[1] / 3.0);
  CHECK(conv.errors[0] > conv.errors[1]);
  CHECK(conv.errors[1] > conv.errors[2]);
  CHECK(conv.errors[2] > conv.errors[3]);
}

TEST_CASE("shell field gradient locates layered samples") {
  // A point on the annulus evaluates to a gradient close to the limit.
  const Vec2 x{0.7, 0.12};
  const Mat2 fine = shell_field_gradient(200, 0.2, x);
  const Mat2 lim = limit_gradient(0.2, x);
  CHECK((fine - lim).fnorm() <= 0.1);
  // Deep points fall in deeper layers but still evaluate.
  const Mat2 deep = shell_field_gradient(50, 0.35, Vec2{0.05, 0.02});
  CHECK(std::fabs(deep.det() - 1.0) <= 1e-10);
}
