#pragma once

// Deterministic text output: shortest round-trip float formatting, the
// header block stamped on every export (tool version, command line, seed),
// the cyclic colormap, and the JSON / CSV / SVG renderers behind the CLI
// subcommands.  All renderers are pure string builders so they can be
// exercised in-process and compared byte-for-byte.

#include <array>
#include <cstdint>
#include <string>

#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/onion.hpp"
#include "ngonstar/single_layer.hpp"
#include "ngonstar/tetra3d.hpp"

namespace ngonstar {

// ---------------------------------------------------------------------------
// Formatting primitives
// ---------------------------------------------------------------------------

// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_double(double v);

// Identification block stamped on every output.
struct OutputMeta {
  std::string command_line;
  std::uint64_t seed = 0;
};

// '#'-prefixed header lines for CSV output.
[[nodiscard]] std::string csv_header(const OutputMeta& meta);

// 256-entry cyclic colormap as "#rrggbb" strings; entry i is the hue at
// fraction i/256 around the wheel, so index 0 and index 255 meet.
[[nodiscard]] const std::array<std::string, 256>& cyclic_colormap();

// Colormap entry for a director angle in [0, pi): the map is periodic, so
// angle 0 and angle pi receive the same color.
[[nodiscard]] const std::string& color_for_angle(double angle);

// ---------------------------------------------------------------------------
// Sampling grids
// ---------------------------------------------------------------------------

// Endpoint-inclusive polar sampling grid; throws std::invalid_argument on
// empty or reversed ranges.
struct PolarGrid {
  double r_min = 0.5;
  double r_max = 1.0;
  int r_steps = 9;
  double theta_min = 0.0;
  double theta_max = 6.0;
  int theta_steps = 13;
};

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

// Geometry of one ring: vertices, triangles, edge data, and the residuals of
// the single-layer verification at tolerance `tol`.
[[nodiscard]] std::string render_construct_json(const NGonConfig& config,
                                                const OutputMeta& meta,
                                                double tol = 1e-10);
[[nodiscard]] std::string render_construct_csv(const NGonConfig& config,
                                               const OutputMeta& meta);

// Deformed star: one filled polygon per affine piece, colored by the
// director angle of the piece gradient, over a reference outline.  Vertices
// are mapped by the piecewise map and scaled by the twelfth root of the
// anisotropy ratio.  World y points up; the renderer negates y once.
[[nodiscard]] std::string render_star_svg(const PiecewiseAffineMap& map,
                                          const OutputMeta& meta);

// Per-layer energy table of the same construction.
[[nodiscard]] std::string render_star_csv(const EnergyReport& energy,
                                          const NoniterabilityGap& gap,
                                          double mismatch, const OutputMeta& meta);

// Limit field sampled on a polar grid; deformation columns are empty
// outside the closed annulus 1/2 <= r <= 1 where it is defined.
[[nodiscard]] std::string render_limit_csv(double alpha, const PolarGrid& grid,
                                           const OutputMeta& meta);
[[nodiscard]] std::string render_limit_json(double alpha, const PolarGrid& grid,
                                            const OutputMeta& meta);

// Strain wells against their finite-difference recovery at step h.
[[nodiscard]] std::string render_linearize_strains_csv(int n, double h,
                                                       const OutputMeta& meta);

// Log-spiral vortex displacement sampled on a polar grid.
[[nodiscard]] std::string render_linearize_vortex_csv(const PolarGrid& grid,
                                                      const OutputMeta& meta);

// Singular-value scan: one CSV row per (theta, r, simplex).
[[nodiscard]] std::string render_scan3d_csv(const TetraScanResult& scan,
                                            const OutputMeta& meta);
[[nodiscard]] std::string render_scan3d_json(const TetraScanResult& scan,
                                             const OutputMeta& meta);

// Quartic root report for one (n, alpha).
[[nodiscard]] std::string render_roots_json(int n, double alpha, const OutputMeta& meta);
[[nodiscard]] std::string render_roots_csv(int n, double alpha, const OutputMeta& meta);

}  // namespace ngonstar
