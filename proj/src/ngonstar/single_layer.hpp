#pragma once

// Piecewise-affine deformations attached to an n-gon shell: the per-triangle
// gradients, the offsets that glue them continuously, point location and
// evaluation, interface checks, and the verification report for the
// construction's defining conditions.

#include <vector>

#include "ngonstar/linalg2.hpp"
#include "ngonstar/ngon_geometry.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Map pieces
// ---------------------------------------------------------------------------

enum class PieceKind { Exterior, Shell, Core };

// One affine piece x -> gradient * x + offset with a convex polygonal
// support.  The exterior piece stores the outer boundary polygon; its
// support is the closed complement of that polygon's interior.
struct AffinePiece {
  PieceKind kind = PieceKind::Shell;
  int layer = -1;  // 0-based shell layer; total layer count for the core
  int index = 0;   // 1-based triangle index within its layer (shell only)
  Mat2 gradient;
  Vec2 offset;
  std::vector<Vec2> polygon;

  [[nodiscard]] Vec2 apply(Vec2 x) const { return gradient.apply(x) + offset; }
};

// Continuous piecewise-affine map.  Pieces are ordered exterior first, then
// shell triangles layer by layer (each 1..2n), then the core; boundary
// points evaluate through the lowest-index piece containing them.
struct PiecewiseAffineMap {
  int n = 0;
  double alpha = 0.0;
  double r_outer = 1.0;
  int layers = 0;
  bool exterior_identity = true;  // true: composed with the inverse outer rotation
  Mat2 outer_rotation;            // rotation of the exterior piece before normalization
  Mat2 inner_rotation;            // rotation of the core piece before normalization
  NGonConfig base;                // layer-0 geometry
  std::vector<AffinePiece> pieces;
};

// ---------------------------------------------------------------------------
// Shell gradients
// ---------------------------------------------------------------------------

// The 2n per-triangle gradients of one shell in the lab frame, together
// with the stretch they are generated from and the boundary rotations the
// construction induces outside and inside the shell.
struct ShellGradients {
  Mat2 stretch;               // gradient of triangle 1
  std::vector<Mat2> g;        // gradients of triangles 1..2n
  Mat2 outer_rotation;        // rotation matching the map across the outer boundary
  Mat2 inner_rotation;        // rotation matching the map across the inner boundary
  double outer_angle = 0.0;
  double inner_angle = 0.0;
};

[[nodiscard]] ShellGradients shell_gradients(const NGonConfig& config);

// ---------------------------------------------------------------------------
// Construction and evaluation
// ---------------------------------------------------------------------------

// Builds the one-shell map: a rotation outside the outer polygon, one affine
// piece per shell triangle, and a rotation on the inner polygon, glued
// continuously with offsets chained from the exterior piece.  With
// `exterior_identity` (default) the whole map is composed with the inverse
// outer rotation, so the exterior piece is exactly the identity.
[[nodiscard]] PiecewiseAffineMap build_single_layer(const NGonConfig& config,
                                                    bool exterior_identity = true);

// Index of the lowest-index piece whose support contains `x`.
[[nodiscard]] int locate_piece(const PiecewiseAffineMap& map, Vec2 x);

// Evaluates the map at `x` through the piece found by locate_piece.
[[nodiscard]] Vec2 evaluate(const PiecewiseAffineMap& map, Vec2 x);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

// Aggregate interface diagnostics: every shared polygon edge is located by
// endpoint matching, and both pieces are compared along it.
struct InterfaceCheck {
  int interfaces = 0;               // number of matched shared edges
  double continuity_residual = 0.0; // worst evaluation mismatch at shared endpoints
  double rank_one_residual = 0.0;   // worst |(G_i - G_j) t| along a shared edge tangent
  double det_residual = 0.0;        // worst |det(gradient) - 1| over all pieces
};

[[nodiscard]] InterfaceCheck check_interfaces(const PiecewiseAffineMap& map);

// Residuals of the four defining conditions of the one-shell construction:
// (i) continuity, (ii) identity outside the outer polygon, (iii) every shell
// gradient lies in the well set, (iv) the core is the expected rotation and
// the long spoke endpoint lands on the mirrored short spoke endpoint.
struct ConditionReport {
  double continuity_residual = 0.0;
  double exterior_residual = 0.0;    // |G_ext - I|_F + |b_ext|
  double well_distance = 0.0;        // worst Cauchy-Green distance of shell pieces
  double inner_angle_residual = 0.0; // core rotation angle vs 2*pi*(1-2*alpha)/n
  double flip_residual = 0.0;        // |u(I_n) - R_ext * mirror(I_1)|
  bool pass = false;
};

[[nodiscard]] ConditionReport verify_conditions(const PiecewiseAffineMap& map,
                                                double tol = 1e-10);

// Frobenius residual of the identity that conjugating the stretch by the
// spoke reflection equals sandwiching it between the two boundary-edge
// rotations: |P0 U P0 - Q(2 pi alpha / n) U Q(2 pi (1-alpha)/n)^T|_F.
[[nodiscard]] double reflection_conjugation_residual(int n, double alpha);

// Closed-form outer rotation angle of the one-shell construction:
// asin((a^2 - 1) cos(pi/n) / (1 + a^2 + 2 a sin(pi/n))).
[[nodiscard]] double beta0_angle(int n, double a);

}  // namespace ngonstar
