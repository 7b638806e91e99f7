#pragma once

// Three-dimensional companion construction: a twisted shrunk tetrahedron
// inside the reference tetrahedron, the fourteen-simplex tiling of the gap
// between them, the piecewise gradients of the map that fixes the outer
// tetrahedron and twists the inner one, and singular-value scans of those
// gradients over the (twist angle, shrink factor) parameter square.

#include <array>
#include <string>
#include <vector>

namespace ngonstar {

// ---------------------------------------------------------------------------
// Small 3-vector / 3x3 matrix support
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

[[nodiscard]] Vec3 operator+(Vec3 u, Vec3 v);
[[nodiscard]] Vec3 operator-(Vec3 u, Vec3 v);
[[nodiscard]] Vec3 operator*(double s, Vec3 v);
[[nodiscard]] double dot3(Vec3 u, Vec3 v);
[[nodiscard]] double norm3(Vec3 v);

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  [[nodiscard]] static Mat3 identity();
  // Matrix with the given columns.
  [[nodiscard]] static Mat3 from_columns(Vec3 c0, Vec3 c1, Vec3 c2);

  [[nodiscard]] Mat3 transpose() const;
  [[nodiscard]] double det() const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] Vec3 apply(Vec3 v) const;
};

[[nodiscard]] Mat3 operator+(const Mat3& a, const Mat3& b);
[[nodiscard]] Mat3 operator-(const Mat3& a, const Mat3& b);
[[nodiscard]] Mat3 operator*(const Mat3& a, const Mat3& b);

// Rotation by `angle` about `axis` (normalized internally; throws on the
// zero vector).
[[nodiscard]] Mat3 rotation_about(Vec3 axis, double angle);

// Singular values of a 3x3 matrix, ascending.
[[nodiscard]] std::array<double, 3> singular_values3(const Mat3& a);

// True when `p` lies in the closed tetrahedron spanned by `vertices`
// (barycentric coordinates within `tol` of the admissible range).
[[nodiscard]] bool tetra_contains(const std::array<Vec3, 4>& vertices, Vec3 p,
                                  double tol = 1e-12);

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

enum class TetraAxis { X3, Vertex };

// One affine piece of the gap map: domain tetrahedron, its image, and the
// affine data x -> gradient x + offset interpolating the vertex images.
struct Simplex3 {
  std::string name;              // capA1..capA4, capB1..capB4, edge12..edge34
  std::array<Vec3, 4> domain;
  std::array<Vec3, 4> image;
  Mat3 gradient;
  Vec3 offset;
  double volume = 0.0;           // unsigned volume of the domain tetrahedron
};

struct TetraConstruction {
  TetraAxis axis = TetraAxis::X3;
  double theta = 0.0;            // twist angle
  double r = 0.0;                // shrink factor, in (0, 1/3)
  std::array<Vec3, 4> outer;     // reference tetrahedron vertices
  std::array<Vec3, 4> inner;     // shrunk counter-rotated copy (domain)
  std::array<Vec3, 4> inner_image;  // inner vertices after the twist
  Mat3 twist;                    // rotation by 2 theta about the axis
  std::vector<Simplex3> simplices;  // the 14 gap pieces, fixed order
  double tiling_residual = 0.0;  // relative defect of the summed volumes
  bool tiling_ok = false;        // residual <= 1e-12 (fails past degeneracy)
};

// Names of the 14 simplices in construction order.
[[nodiscard]] const std::array<std::string, 14>& simplex_names();

// Twist about the x3 coordinate axis; requires theta in (0, pi/2) and
// r in (0, 1/3).
[[nodiscard]] TetraConstruction build_x3(double theta, double r);

// Twist about the main diagonal through the first vertex; requires theta in
// (-pi/2, pi/2) and r in (0, 1/3).
[[nodiscard]] TetraConstruction build_vertex(double theta, double r);

[[nodiscard]] TetraConstruction build_tetra(TetraAxis axis, double theta, double r);

// ---------------------------------------------------------------------------
// Singular-value scan
// ---------------------------------------------------------------------------

struct TetraScanCell {
  double theta = 0.0;
  double r = 0.0;
  std::array<double, 14> sigma_min{};
  std::array<double, 14> sigma_mid{};
  std::array<double, 14> sigma_max{};
  double disparity = 0.0;           // spread of sigma_min over counted pieces
  double det_residual = 0.0;        // worst |det - 1| over counted pieces
  double sigma_mid_residual = 0.0;  // worst |sigma_mid - 1| over counted pieces
  double austenite_residual = 0.0;  // worst defect of the two rigid pieces
  bool refined = false;             // cell re-evaluated in extended precision
};

// Grid scan over an endpoint-inclusive (theta, r) lattice.  For the vertex
// axis the two rigid pieces (capA1, capB1) are excluded from the disparity
// and singular-value residuals and instead checked against their exact
// rigid motions.  Cells whose double-precision residuals are suspicious are
// transparently re-evaluated in extended precision.
struct TetraScanResult {
  TetraAxis axis = TetraAxis::X3;
  std::vector<double> thetas;
  std::vector<double> rs;
  std::vector<TetraScanCell> cells;  // theta-major: cells[it * rs.size() + ir]
  double min_disparity = 0.0;
  double worst_det_residual = 0.0;
  double worst_sigma_mid_residual = 0.0;
  double worst_austenite_residual = 0.0;
};

// Default scan window: theta in [0.05, pi/2 - 0.05], r in [0.02, 0.31].
struct TetraScanWindow {
  double theta_min;
  double theta_max;
  double r_min;
  double r_max;
};

[[nodiscard]] TetraScanWindow default_scan_window();

[[nodiscard]] TetraScanResult scan_singular_values(TetraAxis axis, int theta_steps,
                                                   int r_steps,
                                                   const TetraScanWindow& window);

[[nodiscard]] TetraScanResult scan_singular_values(TetraAxis axis, int theta_steps,
                                                   int r_steps);

}  // namespace ngonstar
