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

TEST_CASE("transformation stretch basics") {
  const double a = stretch_a(5, 0.3);
  const WellMatrix well = bain_matrix(5, a);
  CHECK(well.n == 5);
  CHECK(well.a == doctest::Approx(a).epsilon(1e-15));
  CHECK(well.alpha == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(well.matrix.det() == doctest::Approx(1.0).epsilon(1e-12));
  // a = 1 gives the identity.
  CHECK((bain_matrix(5, 1.0).matrix - Mat2::identity()).max_abs() <= 1e-12);
  CHECK_THROWS_AS((void)bain_matrix(5, 0.0), std::invalid_argument);
}

TEST_CASE("stretch matches the gradient of the first shell triangle") {
  for (int n : {3, 5, 8}) {
    for (double alpha : {0.2, 0.35, 0.47}) {
      const NGonConfig cfg = build_config(n, alpha);
      const ShellGradients grads = shell_gradients(cfg);
      const WellMatrix well = bain_matrix(n, cfg.a);
      CHECK((grads.stretch - well.matrix).max_abs() <= 1e-12);
    }
  }
}

TEST_CASE("symmetry group structure") {
  const NGonConfig cfg = build_config(5, 0.3);
  const auto group = symmetry_group(5, cfg.e11);
  REQUIRE(group.size() == 10);
  for (std::size_t i = 0; i < group.size(); ++i) {
    const Mat2& p = group[i];
    CHECK((p * p.transpose() - Mat2::identity()).max_abs() <= 1e-14);
    CHECK(p.det() == doctest::Approx(i < 5 ? 1.0 : -1.0).epsilon(1e-12));
  }
}

TEST_CASE("well counts over the dihedral orbit") {
  // 2n distinct wells for odd n, n for even n, one at a = 1.
  const int expected[] = {6, 4, 10, 6, 14, 8};
  for (int n = 3; n <= 8; ++n) {
    const double a = stretch_a(n, 0.3);
    CHECK(static_cast<int>(enumerate_wells(n, a).size()) == expected[n - 3]);
  }
  CHECK(enumerate_wells(5, 1.0).size() == 1);
}

TEST_CASE("cauchy-green membership accepts orbit members and rejects mutations") {
  const double a = stretch_a(5, 0.3);
  const auto wells = enumerate_wells(5, a);
  Rng rng(11);
  for (const Mat2& w : wells) {
    const Mat2 f = rotation(rng.uniform(-kPi, kPi)) * w;
    const MembershipReport in = membership_cauchy_green(f, wells, 1e-10);
    CHECK(in.applicable);
    CHECK(in.member);
    CHECK(in.distance <= 1e-12);
    const MembershipReport out = membership_cauchy_green(1.01 * f, wells, 1e-10);
    CHECK_FALSE(out.member);
    CHECK(out.distance >= 1e-3);
  }
  // Orientation-reversing inputs are flagged inapplicable.
  const MembershipReport rev =
      membership_cauchy_green(Mat2{1.0, 0.0, 0.0, -1.0}, wells, 1e-10);
  CHECK_FALSE(rev.applicable);
}

TEST_CASE("limit-set membership") {
  const double a = 1.7;
  const Mat2 u{a, 0.0, 0.0, 1.0 / a};
  const MembershipReport in = limit_membership(rotation(0.9) * u, a, 1e-10);
  CHECK(in.member);
  CHECK(in.distance <= 1e-12);
  // A pure rotation misses the limit set by |a - 1|.
  const MembershipReport out = limit_membership(rotation(0.9), a, 1e-10);
  CHECK_FALSE(out.member);
  CHECK(out.distance == doctest::Approx(a - 1.0).epsilon(1e-10));
}

TEST_CASE("every finite-n well lies in the limit set of its own stretch") {
  for (int n : {4, 7}) {
    const double alpha = 0.3;
    const double a = stretch_a(n, alpha);
    const auto wells = enumerate_wells(n, a);
    const double sigma1 = svd2(bain_matrix(n, a).matrix).sigma1;
    for (const Mat2& w : wells) {
      const MembershipReport rep = limit_membership(w, sigma1, 1e-9);
      CHECK(rep.member);
    }
  }
}

TEST_CASE("min coset distance is zero exactly on well rotations") {
  const auto wells = enumerate_wells(5, stretch_a(5, 0.35));
  CHECK(min_coset_distance(rotation(1.2) * wells[2], wells) <= 1e-13);
  CHECK(min_coset_distance(Mat2::identity(), wells) >= 1e-2);
}

TEST_CASE("director angle and degeneracy") {
  // F = R(t) diag(s, 1/s) has its long axis along angle t.
  const Mat2 f = rotation(0.4) * Mat2{2.0, 0.0, 0.0, 0.5};
  const Director d = director(f);
  CHECK_FALSE(d.degenerate);
  CHECK(d.angle == doctest::Approx(0.4).epsilon(1e-12));
  // Angles are reported in [0, pi).
  const Director d2 = director(rotation(0.4 + kPi) * Mat2{2.0, 0.0, 0.0, 0.5});
  CHECK(d2.angle == doctest::Approx(0.4).epsilon(1e-9));
  // Conformal matrices have no director.
  CHECK(director(rotation(0.3)).degenerate);
  CHECK(director(2.0 * rotation(-0.8)).degenerate);
}

TEST_CASE("nematic well parameters are fixed powers of the anisotropy") {
  const NLCEWellParams p = nlce_well_params(16.0);
  CHECK(p.anisotropy == doctest::Approx(16.0));
  CHECK(p.major_stretch == doctest::Approx(std::pow(16.0, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(p.minor_stretch == doctest::Approx(std::pow(16.0, -1.0 / 6.0)).epsilon(1e-14));
  CHECK(p.planar_det == doctest::Approx(std::pow(16.0, 1.0 / 6.0)).epsilon(1e-14));
  CHECK(p.planar_normalization ==
        doctest::Approx(std::pow(16.0, -1.0 / 12.0)).epsilon(1e-14));
  // Normalized planar restriction has determinant one: the two normalized
  // stretches r^(1/4) and r^(-1/4) are reciprocal.
  const double s1 = p.major_stretch * p.planar_normalization;
  const double s2 = p.minor_stretch * p.planar_normalization;
  CHECK(s1 * s2 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("anisotropy ratio pinned values") {
  // r = sigma1(U)^4 with sigma1 the larger principal stretch.
  const double sigma1 = svd2(bain_matrix(3, stretch_a(3, 0.1)).matrix).sigma1;
  CHECK(sigma1 == doctest::Approx(3.618757).epsilon(1e-5));
  CHECK(nlce_anisotropy(3, 0.1) == doctest::Approx(171.489).epsilon(1e-4));
  CHECK(nlce_anisotropy(4, 0.1) == doctest::Approx(117.769).epsilon(1e-4));
  CHECK(nlce_anisotropy(5, 0.1) == doctest::Approx(101.747).epsilon(1e-4));
  CHECK(nlce_anisotropy(10, 0.1) == doctest::Approx(85.465).epsilon(1e-4));
  CHECK(nlce_anisotropy(50, 0.35) == doctest::Approx(3.4517).epsilon(1e-4));
  CHECK(nlce_anisotropy(6, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}
