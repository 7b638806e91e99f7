#pragma once

// Concentric n-gon configurations: two nested regular n-gons whose shell is
// tiled by 2n triangles, the closed-form radius ratio and edge-length ratio
// that make the construction compatible, and the quartic-root analysis that
// certifies the radius ratio as the unique admissible root.

#include <array>
#include <vector>

#include "ngonstar/linalg2.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Configuration type
// ---------------------------------------------------------------------------

// Geometry of one shell between nested regular n-gons.
//
// Outer vertices E_i sit at angles 2*pi*(i-1)/n on the circle of radius r_E;
// inner vertices I_i are rotated by 2*pi*alpha/n and scaled to r_I.  The 2n
// shell triangles alternate between inner-edge type (odd index, one outer
// vertex) and outer-edge type (even index, two outer vertices).
struct NGonConfig {
  int n = 0;              // number of polygon sides, n >= 3
  double alpha = 0.0;     // inner-rotation fraction, in (0, 1)
  double r_outer = 1.0;   // circumradius of the outer polygon
  double r_inner = 0.0;   // circumradius of the inner polygon

  std::vector<Vec2> outer;  // E_1..E_n
  std::vector<Vec2> inner;  // I_1..I_n

  // Triangle vertex indices into the combined list [outer..., inner...];
  // triangle j (1-based) lives at triangles[j-1].
  std::vector<std::array<int, 3>> triangles;

  double l1 = 0.0;     // |E_1 - I_n|
  double l2 = 0.0;     // |E_1 - I_1|
  double a = 0.0;      // edge-length ratio l1 / l2
  Vec2 e11{};          // unit vector from E_1 toward I_1
  Vec2 en1{};          // unit vector from E_1 toward I_n
  double phi = 0.0;    // interior half-angle (n-2)*pi/(2n)

  // Set when r_inner / r_outer < 1e-6 (alpha extremely close to 0 or 1);
  // operations stay defined but downstream tolerances lose meaning.
  bool near_degenerate = false;

  // Vertex position for the combined index used in `triangles`.
  [[nodiscard]] Vec2 vertex(int combined_index) const {
    return combined_index < n ? outer[static_cast<std::size_t>(combined_index)]
                              : inner[static_cast<std::size_t>(combined_index - n)];
  }

  // The three corners of 1-based triangle `j`.
  [[nodiscard]] std::array<Vec2, 3> triangle_vertices(int j) const {
    const auto& t = triangles[static_cast<std::size_t>(j - 1)];
    return {vertex(t[0]), vertex(t[1]), vertex(t[2])};
  }
};

// ---------------------------------------------------------------------------
// Closed-form relations
// ---------------------------------------------------------------------------

// Ratio r_inner / r_outer that makes the shell triangulation compatible:
// (cos(pi*(1-2*alpha)/n) - sqrt(sin(2*pi*alpha/n) * sin(2*pi*(1-alpha)/n)))
//   / cos(pi/n).
// Domain: n >= 3, alpha in (0, 1); the value lies in (0, 1).
[[nodiscard]] double radius_ratio(int n, double alpha);

// Edge-length ratio a = l1/l2 = sqrt(sin(2*pi*(1-alpha)/n) / sin(2*pi*alpha/n));
// strictly decreasing in alpha with a(1/2) = 1.
[[nodiscard]] double stretch_a(int n, double alpha);

// Inverse of stretch_a in alpha: the unique alpha in (0, 1) with
// stretch_a(n, alpha) = a.
[[nodiscard]] double alpha_of_a(int n, double a);

// Builds the full configuration at outer radius `r_outer`.
[[nodiscard]] NGonConfig build_config(int n, double alpha, double r_outer = 1.0);

// Relative tiling residual: |sum of triangle areas - shell area| / shell area.
[[nodiscard]] double tiling_residual(const NGonConfig& config);

// Signed area of a triangle given by three corners.
[[nodiscard]] double triangle_area(const std::array<Vec2, 3>& t);

// ---------------------------------------------------------------------------
// Quartic-root analysis
// ---------------------------------------------------------------------------

// The four closed-form candidate values of x = r_inner/r_outer obtained by
// squaring the compatibility relation, with per-root admissibility flags.
// Exactly one root is admissible for every n >= 3, alpha in (0, 1), and it
// coincides with radius_ratio.
struct QuarticRootReport {
  struct Root {
    double value = 0.0;             // +infinity encodes the blown-up root
    bool is_real = false;           // real and finite
    bool in_unit_interval = false;  // value in the open interval (0, 1)
    bool satisfies_relation = false;  // unsquared compatibility relation holds
    [[nodiscard]] bool admissible() const {
      return is_real && in_unit_interval && satisfies_relation;
    }
  };
  std::array<Root, 4> roots;
  int admissible_count = 0;
  int admissible_index = -1;  // 0-based index of the admissible root
};

// Evaluates the four closed-form roots and their admissibility flags.
[[nodiscard]] QuarticRootReport quartic_roots(int n, double alpha);

// Value of the linear-term factor 1 + x^2 cos(2 pi/n) - 2 x cos(pi/n) cos(rho/2)
// at the third closed-form root; strictly negative wherever that root is real,
// which is what disqualifies it.
struct ThirdRootCheck {
  bool applicable = false;  // third root real and finite
  double value = 0.0;
};
[[nodiscard]] ThirdRootCheck third_root_negativity(int n, double alpha);

// Coefficients (ascending order) of the degree-4 polynomial whose roots are
// the four closed-form candidates; used to cross-check against a
// general-purpose root finder.
[[nodiscard]] std::array<double, 5> quartic_coefficients(int n, double alpha);

}  // namespace ngonstar
