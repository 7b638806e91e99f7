#pragma once

// Self-similar multi-layer (onion) maps: each shell layer is a scaled,
// rotated copy of the base shell, glued continuously, with a rotation on
// the innermost core.  Includes the layer symmetry checks, the gap that
// blocks exact layer-by-layer iteration, and the elastic/interface energy
// accounting of the truncated construction.

#include <vector>

#include "ngonstar/single_layer.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

// Default number of shell layers: the smallest N with
// (r_inner/r_outer)^N <= 1/2, plus one.
[[nodiscard]] int default_layer_count(int n, double alpha);

// Builds the onion map with `layers` shell layers (values < 1 select the
// default count).  Piece order: exterior, then layers outside-in with
// triangles 1..2n each, then the core rotation.
[[nodiscard]] PiecewiseAffineMap build_onion(int n, double alpha, int layers = 0,
                                             bool exterior_identity = true);

// ---------------------------------------------------------------------------
// Layer symmetry and iteration checks
// ---------------------------------------------------------------------------

// Residuals (max entry magnitude) of the two gradient symmetries of one
// shell: the parity relation pairing opposite triangles (a transpose
// relation for odd n, equality for even n), and the iteration relation
// linking each odd triangle to its even neighbor one layer in.
struct LayerSymmetryReport {
  double parity_residual = 0.0;
  double iteration_residual = 0.0;
};

[[nodiscard]] LayerSymmetryReport verify_layer_symmetries(int n, double alpha);

// Distances of the once-iterated shell gradients to the well set.  The
// outer-edge triangles iterate exactly (distance ~ 0); the inner-edge
// triangles stay uniformly far from every well, which is what forces the
// core to stop the construction.  Reported alongside is the residual of the
// predicted unit eigenvector of U^T U.
struct NoniterabilityGap {
  double outer = 0.0;                 // max over outer-edge (even) triangles
  double inner = 0.0;                 // min over inner-edge (odd) triangles
  double inner_max = 0.0;             // max over inner-edge (odd) triangles
  double eigenvector_residual = 0.0;
};

[[nodiscard]] NoniterabilityGap noniterability_gap(int n, double alpha);

// Skewness of the stretch: |U - U^T|_F / sqrt(2), equal in closed form to
// tan(pi/n) * |a - 1/a|.
[[nodiscard]] double mismatch_norm(int n, double alpha);

// ---------------------------------------------------------------------------
// Energy accounting
// ---------------------------------------------------------------------------

// Interface energy of a piecewise-affine map: sum over shared polygon edges
// of edge length times |gradient jump|_F.
[[nodiscard]] double surface_energy(const PiecewiseAffineMap& map);

struct LayerEnergy {
  int layer = 0;
  double elastic = 0.0;     // sum over the layer's triangles of area * dist^2
  double bound_term = 0.0;  // comparison series term for this layer
};

// Elastic energy of the truncated onion (squared distance of each piece
// gradient to the wells-and-rotations set, weighted by area), the matching
// lower-bound comparison series, and the interface energy.
struct EnergyReport {
  int n = 0;
  double alpha = 0.0;
  int layers = 0;
  double elastic = 0.0;
  double bound = 0.0;
  double surface = 0.0;
  double ratio = 0.0;  // elastic / bound when bound > 0, else 0
  std::vector<LayerEnergy> per_layer;
};

[[nodiscard]] EnergyReport energy_report(int n, double alpha, int layers = 0);

}  // namespace ngonstar
