#pragma once

// Linearization of the shell construction about the undeformed state: the
// trace-free strain wells, their dihedral orbit, finite-difference
// consistency of the nonlinear family with the strains, the log-spiral
// vortex displacement, and the eikonal-type residual it feeds.

#include <vector>

#include "ngonstar/linalg2.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Strain wells
// ---------------------------------------------------------------------------

// Symmetric trace-free 2x2 strain, stored by its two free components.
struct Strain2 {
  double e11 = 0.0;
  double e12 = 0.0;

  [[nodiscard]] Mat2 matrix() const { return {e11, e12, e12, -e11}; }
  [[nodiscard]] Vec2 vector() const { return {e11, e12}; }
};

// Strain well of triangle j (1-based, j in 1..2n) in the frame whose first
// axis is the undeformed spoke direction: rotation conjugates of
// [[1, -tan(pi/n)], [-tan(pi/n), -1]], with the off-diagonal sign flipped
// for even j.  Throws for j outside 1..2n.
[[nodiscard]] Strain2 strain_well(int n, int j);

// Distinct matrices in the dihedral orbit {R E_1 R^T} of the first strain
// well (rotations by 2 pi k / n and reflections about axes at k pi / n),
// deduplicated at Frobenius tolerance 1e-10.
[[nodiscard]] std::vector<Strain2> lin_well_set(int n);

// Size of lin_well_set(n): n for odd n.
[[nodiscard]] int orbit_count(int n);

// ---------------------------------------------------------------------------
// Finite-difference linearization
// ---------------------------------------------------------------------------

// Central difference quotients of the shell family in the stretch ratio at
// a = 1: quotients of the triangle gradients and boundary rotations, the
// symmetrized quotients expressed in the undeformed spoke frame, and their
// residuals against the strain wells.
struct LinearizedShell {
  int n = 0;
  double h = 0.0;
  std::vector<Mat2> quotients;    // (G_j(1+h) - G_j(1-h)) / (2h), lab frame
  std::vector<Mat2> hat_strains;  // symmetrized quotients in the spoke frame
  Mat2 exterior_quotient;         // quotient of the outer rotation
  Mat2 inner_quotient;            // quotient of the inner rotation
  double strain_residual = 0.0;   // max_j max-entry |hat_strain_j - E_j|
  double exterior_sym_residual = 0.0;  // max entry of sym(exterior_quotient)
  double inner_sym_residual = 0.0;
  double tangential_jump = 0.0;   // max |(D_j - D_{j+1}) t| over shared edges
};

// Builds the linearization at step `h` (requires 0 < h <= 1e-3); the strain
// residual decreases as O(h^2).
[[nodiscard]] LinearizedShell linearized_map(int n, double h);

// ---------------------------------------------------------------------------
// Orbit symmetries of the strain wells
// ---------------------------------------------------------------------------

// Residuals of the two symmetries of the strain well set for odd n:
// conjugation by the axis map C = Q((n-1) pi / n) * diag(1, -1) preserves
// the set (and fixes wells 1 and n+1 elementwise), and a half-step rotation
// shifts the well index by one: R(pi/n) E_{j+1} R(pi/n)^T = Q_1 E_j Q_1^T.
struct StrainSymmetryReport {
  double anchor_residual = 0.0;          // elementwise residual at j = 1
  double set_residual = 0.0;             // worst distance of a conjugate to the set
  std::vector<int> elementwise_fixed;    // 1-based j fixed elementwise (tol 1e-12)
  double shift_residual = 0.0;           // worst residual of the index-shift identity
};

[[nodiscard]] StrainSymmetryReport strain_orbit_symmetries(int n);

// ---------------------------------------------------------------------------
// Log-spiral vortex displacement
// ---------------------------------------------------------------------------

// w(x) = 2 (1 - log|x|^2) (x_2, -x_1); throws at the origin.
[[nodiscard]] Vec2 log_vortex_value(Vec2 x);

// Exact gradient of w.
[[nodiscard]] Mat2 log_vortex_gradient(Vec2 x);

// Symmetric part of the gradient in closed form; its eigenvalues are -2, 2
// everywhere away from the origin.
[[nodiscard]] Mat2 log_vortex_strain(Vec2 x);

// Residual of the eikonal-type compatibility equation at a displacement
// gradient and the two free entries of the trace-1/2 comparison matrix:
// (e11 + m11 - 1/4)^2 + (e12 + m12)^2 - 9/16 with e the symmetric part.
[[nodiscard]] double eikonal_residual(const Mat2& displacement_gradient, double m11,
                                      double m12);

// Frobenius strain residual of the finite-difference linearization computed
// in both the spoke frame and the lab frame; the two agree to rounding
// because the frame change is orthogonal, which is what the discrepancy
// field measures.
struct BasisIndependence {
  double strain_residual = 0.0;    // max_j Frobenius residual (spoke frame)
  double basis_discrepancy = 0.0;  // max_j |spoke-frame - lab-frame residual|
};

[[nodiscard]] BasisIndependence basis_independence_check(int n, double h);

}  // namespace ngonstar
