#pragma once

// The rotationally self-similar limit deformation on the unit disk: closed
// forms for its parameters, value, and gradient, a finite-difference
// consistency check, and the convergence study comparing the finite-n shell
// gradient fields against the limit on the annulus 1/2 <= |x| <= 1.

#include <cstdint>
#include <vector>

#include "ngonstar/linalg2.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

// Parameters of the limit field at twist fraction alpha in (0, 1).
struct LimitParams {
  double alpha = 0.5;
  double a = 1.0;      // limiting stretch ratio sqrt((1-alpha)/alpha)
  double rho0 = 0.0;   // logarithmic winding rate (2 alpha - 1)/sqrt(alpha (1-alpha))
  double beta0 = 0.0;  // exterior rotation angle asin(1 - 2 alpha)
  Vec2 e;              // stretch direction (sqrt(1-alpha), -sqrt(alpha))
};

[[nodiscard]] LimitParams limit_params(double alpha);

// Gradient of the limit deformation: a constant rotation outside the unit
// circle, a second constant rotation inside radius 1/2, and a log-spiral
// conjugated stretch on the annulus.  Throws for x = 0.
[[nodiscard]] Mat2 limit_gradient(double alpha, Vec2 x);

// The limit deformation itself, defined on the closed annulus
// 1/2 <= |x| <= 1 (throws outside); |v(x)| = |x| pointwise.
[[nodiscard]] Vec2 limit_deformation(double alpha, Vec2 x);

// ---------------------------------------------------------------------------
// Consistency and convergence
// ---------------------------------------------------------------------------

// Max-norm residual between the analytic gradient and a central finite
// difference of the deformation at `samples` random annulus points
// (radii in (0.52, 0.98) so the stencil stays inside).  O(h^2) accurate.
[[nodiscard]] double verify_gradient_consistency(double alpha, int samples, double h,
                                                 std::uint64_t seed);

// Largest tangential mismatch between the annulus gradient just inside the
// unit circle and the exterior rotation, over a uniform angle grid.
[[nodiscard]] double interface_tangential_jump(double alpha, int num_angles = 50);

// Sup-norm errors of the finite-n shell gradient fields against the limit
// gradient over common random annulus samples.  Samples are accepted only
// when every tested n locates them strictly inside a shell triangle, at
// least `edge_margin` away from its edges (in layer-0 coordinates).
struct ConvergenceResult {
  std::vector<int> ns;
  std::vector<double> errors;  // Frobenius sup over the accepted samples
  int samples = 0;
};

[[nodiscard]] ConvergenceResult convergence_test(double alpha, const std::vector<int>& ns,
                                                 int samples, std::uint64_t seed,
                                                 double edge_margin = 1e-6);

// Gradient of the finite-n self-similar shell field at `x` (the infinite
// onion, with no core): the exterior rotation outside the outer polygon,
// and the located layer's triangle gradient otherwise.  Used by the
// convergence study; throws when the point cannot be located (it lies
// within rounding of a triangle boundary, or too deep to resolve).
[[nodiscard]] Mat2 shell_field_gradient(int n, double alpha, Vec2 x);

}  // namespace ngonstar
