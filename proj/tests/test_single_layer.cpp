#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/rng.hpp"
#include "ngonstar/single_layer.hpp"
#include "ngonstar/wells.hpp"

namespace {

using namespace ngonstar;

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("single-layer map passes its defining conditions across the grid") {
  for (int n = 3; n <= 8; ++n) {
    for (double alpha : {0.2, 0.35, 0.47, 0.5, 0.8}) {
      const PiecewiseAffineMap map = build_single_layer(build_config(n, alpha));
      const ConditionReport report = verify_conditions(map);
      CAPTURE(n);
      CAPTURE(alpha);
      CHECK(report.pass);
      CHECK(report.continuity_residual <= 1e-12);
      CHECK(report.exterior_residual <= 1e-14);
      CHECK(report.inner_angle_residual <= 1e-12);
      CHECK(report.flip_residual <= 1e-12);
      CHECK(report.well_distance <= 1e-12);
    }
  }
}

TEST_CASE("piece layout and interface count") {
  const PiecewiseAffineMap map = build_single_layer(build_config(5, 0.3));
  REQUIRE(map.pieces.size() == 12);  // exterior + 10 shell triangles + core
  CHECK(map.pieces.front().kind == PieceKind::Exterior);
  CHECK(map.pieces.back().kind == PieceKind::Core);
  const InterfaceCheck ic = check_interfaces(map);
  // n exterior edges + 2n shell-shell spokes + n core edges.
  CHECK(ic.interfaces == 4 * 5);
  CHECK(ic.continuity_residual <= 1e-12);
  CHECK(ic.rank_one_residual <= 1e-12);
  CHECK(ic.det_residual <= 1e-12);
}

TEST_CASE("exterior normalization composes with the inverse outer rotation") {
  const NGonConfig cfg = build_config(4, 0.35);
  const PiecewiseAffineMap normalized = build_single_layer(cfg, true);
  CHECK((normalized.pieces.front().gradient - Mat2::identity()).max_abs() <= 1e-14);
  CHECK(norm(normalized.pieces.front().offset) <= 1e-14);

  const PiecewiseAffineMap raw = build_single_layer(cfg, false);
  const ShellGradients grads = shell_gradients(cfg);
  CHECK((raw.pieces.front().gradient - grads.outer_rotation).max_abs() <= 1e-14);
  // The two variants differ exactly by that rotation on every piece.
  for (std::size_t i = 0; i < raw.pieces.size(); ++i) {
    const Mat2 lhs = grads.outer_rotation * normalized.pieces[i].gradient;
    CHECK((lhs - raw.pieces[i].gradient).max_abs() <= 1e-12);
  }
}

TEST_CASE("boundary rotation angles match their closed forms") {
  for (int n : {3, 5, 8}) {
    for (double alpha : {0.2, 0.35, 0.47, 0.65}) {
      const NGonConfig cfg = build_config(n, alpha);
      const ShellGradients grads = shell_gradients(cfg);
      // Outer angle: closed arcsine form, sign included.
      CHECK(grads.outer_angle ==
            doctest::Approx(beta0_angle(n, cfg.a)).epsilon(1e-10));
      // Inner rotation relative to the outer one turns by 2 pi (1-2 alpha)/n.
      const double relative = rotation_angle(grads.outer_rotation.transpose() *
                                             grads.inner_rotation);
      const double expected = 2.0 * kPi * (1.0 - 2.0 * alpha) / n;
      CHECK(relative == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("shell gradients lie in the well set") {
  const NGonConfig cfg = build_config(6, 0.4);
  const ShellGradients grads = shell_gradients(cfg);
  const auto wells = enumerate_wells(6, cfg.a);
  for (const Mat2& g : grads.g) {
    const MembershipReport rep = membership_cauchy_green(g, wells, 1e-10);
    CHECK(rep.member);
    CHECK(rep.distance <= 1e-13);
  }
}

TEST_CASE("point location and evaluation") {
  const NGonConfig cfg = build_config(5, 0.3);
  const PiecewiseAffineMap map = build_single_layer(cfg);

  // Far exterior points use the exterior piece (the identity here).
  const Vec2 far{3.0, -2.0};
  CHECK(locate_piece(map, far) == 0);
  CHECK(norm(evaluate(map, far) - far) <= 1e-14);

  // Triangle centroids locate to their own piece.
  for (int j = 1; j <= 10; ++j) {
    const auto tv = cfg.triangle_vertices(j);
    const Vec2 c = (1.0 / 3.0) * (tv[0] + tv[1] + tv[2]);
    const AffinePiece& piece = map.pieces[static_cast<std::size_t>(locate_piece(map, c))];
    CHECK(piece.kind == PieceKind::Shell);
    CHECK(piece.index == j);
  }

  // The origin belongs to the core.
  CHECK(map.pieces[static_cast<std::size_t>(locate_piece(map, Vec2{0.0, 0.0}))].kind ==
        PieceKind::Core);

  // Evaluation is continuous across each shared spoke: both endpoint pieces
  // agree at random points of the edge.
  Rng rng(3);
  for (int j = 1; j <= 10; ++j) {
    const auto tv = cfg.triangle_vertices(j);
    for (int trial = 0; trial < 4; ++trial) {
      const double t = rng.uniform();
      const Vec2 p = (1.0 - t) * tv[0] + t * tv[1];
      const Vec2 via_map = evaluate(map, p);
      const AffinePiece& own = map.pieces[static_cast<std::size_t>(j)];
      CHECK(norm(via_map - own.apply(p)) <= 1e-12);
    }
  }
}

TEST_CASE("symmetric twist gives a rotation-only shell") {
  const NGonConfig cfg = build_config(6, 0.5);
  const ShellGradients grads = shell_gradients(cfg);
  for (const Mat2& g : grads.g) {
    CHECK(dist_to_rotation_coset(g, Mat2::identity()) <= 1e-12);
  }
  CHECK(std::fabs(grads.inner_angle) <= 1e-14);
}

TEST_CASE("mutated gradients break the well condition") {
  const PiecewiseAffineMap map = build_single_layer(build_config(5, 0.3));
  PiecewiseAffineMap broken = map;
  broken.pieces[1].gradient = 1.01 * broken.pieces[1].gradient;
  const ConditionReport report = verify_conditions(broken);
  CHECK_FALSE(report.pass);
  CHECK(report.well_distance >= 1e-3);
}

TEST_CASE("reflection conjugation identity and its falsification") {
  for (int n = 3; n <= 10; ++n) {
    for (double alpha : {0.1, 0.35, 0.6, 0.9}) {
      CHECK(reflection_conjugation_residual(n, alpha) <= 1e-12);
    }
  }
  // The identity needs the two boundary rotations on opposite sides; using
  // the same rotation twice fails at order one.
  const NGonConfig cfg = build_config(5, 0.35);
  const Mat2 u = shell_gradients(cfg).stretch;
  const Mat2 p0 = reflection_about(cfg.e11);
  const Mat2 qa = rotation(2.0 * kPi * 0.35 / 5.0);
  const double wrong = (p0 * u * p0 - qa * u * qa.transpose()).max_abs();
  CHECK(wrong >= 1e-3);
}
