#pragma once

// Energy-well machinery for the star construction: the transformation
// stretch, its dihedral symmetry group, the resulting well set, and the
// membership / anisotropy queries built on top of them.

#include <limits>
#include <vector>

#include "ngonstar/linalg2.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Transformation stretch
// ---------------------------------------------------------------------------

// Unimodular stretch attached to the first spoke of the star, together with
// the frame data it was assembled from.
struct WellMatrix {
  int n = 0;          // polygon side count
  double alpha = 0.0; // twist fraction recovered from the stretch ratio
  double a = 1.0;     // principal edge-length ratio l1 / l2
  Vec2 e11;           // unit vector along the first inner spoke
  Mat2 matrix;        // the stretch itself (determinant 1)
};

// Builds the stretch for an n-gon star with edge-length ratio `a` (> 0).
// The twist fraction is recovered from `a`, so `a = 1` yields the identity.
[[nodiscard]] WellMatrix bain_matrix(int n, double a);

// ---------------------------------------------------------------------------
// Symmetry group and well set
// ---------------------------------------------------------------------------

// Dihedral group of order 2n in the frame of the spoke direction `e11`:
// the n rotations by multiples of 2*pi/n followed by the n reflections
// about axes at angle(e11) + k*pi/n.  The first n entries have determinant
// +1, the last n have determinant -1.
[[nodiscard]] std::vector<Mat2> symmetry_group(int n, const Vec2& e11);

// Distinct wells {P * U * P^T : P in the symmetry group} modulo left
// rotations, deduplicated by comparing Cauchy-Green tensors to within `tol`.
// Counts: 2n for odd n, n for even n, and 1 when a == 1.
[[nodiscard]] std::vector<Mat2> enumerate_wells(int n, double a, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Membership queries
// ---------------------------------------------------------------------------

struct MembershipReport {
  bool applicable = true; // false when the query matrix is orientation-reversing
  bool member = false;
  double distance = std::numeric_limits<double>::infinity();
};

// Cauchy-Green membership: `f` belongs to the rotation orbit of some well
// exactly when min_W |f^T f - W^T W|_F <= tol.  Matrices with non-positive
// determinant are flagged inapplicable.
[[nodiscard]] MembershipReport membership_cauchy_green(const Mat2& f,
                                                       const std::vector<Mat2>& wells,
                                                       double tol);

// Membership in the large-n limit set for stretch ratio `a`: determinant
// within `tol` of 1 and singular values within `tol` of
// (max(a, 1/a), min(a, 1/a)).  The reported distance is the worst of the
// three deviations.
[[nodiscard]] MembershipReport limit_membership(const Mat2& f, double a, double tol);

// Smallest rotation-coset distance min_W |f - Q W|_F over the well list.
[[nodiscard]] double min_coset_distance(const Mat2& f, const std::vector<Mat2>& wells);

// ---------------------------------------------------------------------------
// Director and anisotropy
// ---------------------------------------------------------------------------

// Orientation of the longest material direction: the eigenvector of f f^T
// for its larger eigenvalue, reported as an angle in [0, pi).  When the
// singular values coincide (conformal f) the direction is undefined and the
// degenerate flag is set instead.
struct Director {
  double angle = 0.0;
  bool degenerate = false;
};

[[nodiscard]] Director director(const Mat2& f);

// Derived well geometry for a nematic-elastomer comparison at anisotropy
// parameter r: principal stretches of the 3D wells, the determinant of
// their planar restriction, and the scale factor that renormalises the
// planar restriction to determinant 1.
struct NLCEWellParams {
  double anisotropy = 1.0;            // r
  double major_stretch = 1.0;         // r^(1/3)
  double minor_stretch = 1.0;         // r^(-1/6)
  double planar_det = 1.0;            // r^(1/6)
  double planar_normalization = 1.0;  // r^(-1/12)
};

[[nodiscard]] NLCEWellParams nlce_well_params(double anisotropy);

// Anisotropy parameter matching the star's well set to a nematic-elastomer
// well set: r = sigma1(U)^4, where sigma1 is the larger singular value of
// the stretch.  Verifies along the way that every well lies exactly in the
// limit set with stretch sigma1; returns 1 when alpha == 1/2.
[[nodiscard]] double nlce_anisotropy(int n, double alpha);

}  // namespace ngonstar
