#include "ngonstar/tetra3d.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Scalar abstraction: the whole construction is evaluated in double first
// and re-evaluated in __float128 for cells whose residuals look degraded.
// ---------------------------------------------------------------------------

template <class T>
struct Scalar;

template <>
struct Scalar<double> {
  static double sqrt(double v) { return std::sqrt(v); }
  static double abs(double v) { return std::fabs(v); }
  static double cos(double v) { return std::cos(v); }
  static double sin(double v) { return std::sin(v); }
  static double eps() { return 1e-15; }
};

template <>
struct Scalar<__float128> {
  static __float128 sqrt(__float128 v) { return sqrtq(v); }
  static __float128 abs(__float128 v) { return fabsq(v); }
  static __float128 cos(__float128 v) { return cosq(v); }
  static __float128 sin(__float128 v) { return sinq(v); }
  static __float128 eps() { return static_cast<__float128>(1e-31); }
};

template <class T>
struct V3T {
  T x{}, y{}, z{};
};

template <class T>
V3T<T> operator+(V3T<T> u, V3T<T> v) {
  return {u.x + v.x, u.y + v.y, u.z + v.z};
}

template <class T>
V3T<T> operator-(V3T<T> u, V3T<T> v) {
  return {u.x - v.x, u.y - v.y, u.z - v.z};
}

template <class T>
V3T<T> operator*(T s, V3T<T> v) {
  return {s * v.x, s * v.y, s * v.z};
}

template <class T>
V3T<T> negate(V3T<T> v) {
  return {-v.x, -v.y, -v.z};
}

template <class T>
struct M3T {
  T m[3][3]{};

  static M3T identity() {
    M3T r;
    r.m[0][0] = T(1);
    r.m[1][1] = T(1);
    r.m[2][2] = T(1);
    return r;
  }

  static M3T from_columns(V3T<T> c0, V3T<T> c1, V3T<T> c2) {
    M3T r;
    r.m[0][0] = c0.x;
    r.m[1][0] = c0.y;
    r.m[2][0] = c0.z;
    r.m[0][1] = c1.x;
    r.m[1][1] = c1.y;
    r.m[2][1] = c1.z;
    r.m[0][2] = c2.x;
    r.m[1][2] = c2.y;
    r.m[2][2] = c2.z;
    return r;
  }

  M3T transpose() const {
    M3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  V3T<T> apply(V3T<T> v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
};

template <class T>
M3T<T> operator-(const M3T<T>& a, const M3T<T>& b) {
  M3T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

template <class T>
M3T<T> operator*(const M3T<T>& a, const M3T<T>& b) {
  M3T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T acc{};
      for (int k = 0; k < 3; ++k) acc = acc + a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

template <class T>
M3T<T> inverse(const M3T<T>& a) {
  const T d = a.det();
  if (Scalar<T>::abs(d) == T(0)) throw std::invalid_argument("singular 3x3 matrix");
  M3T<T> adj;
  adj.m[0][0] = a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1];
  adj.m[0][1] = a.m[0][2] * a.m[2][1] - a.m[0][1] * a.m[2][2];
  adj.m[0][2] = a.m[0][1] * a.m[1][2] - a.m[0][2] * a.m[1][1];
  adj.m[1][0] = a.m[1][2] * a.m[2][0] - a.m[1][0] * a.m[2][2];
  adj.m[1][1] = a.m[0][0] * a.m[2][2] - a.m[0][2] * a.m[2][0];
  adj.m[1][2] = a.m[0][2] * a.m[1][0] - a.m[0][0] * a.m[1][2];
  adj.m[2][0] = a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0];
  adj.m[2][1] = a.m[0][1] * a.m[2][0] - a.m[0][0] * a.m[2][1];
  adj.m[2][2] = a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
  const T inv_d = T(1) / d;
  M3T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = adj.m[i][j] * inv_d;
  return r;
}

template <class T>
T max_abs_diff(const M3T<T>& a, const M3T<T>& b) {
  T worst{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const T d = Scalar<T>::abs(a.m[i][j] - b.m[i][j]);
      if (d > worst) worst = d;
    }
  return worst;
}

// Rotation about a (normalized) axis by the Rodrigues formula.
template <class T>
M3T<T> rodrigues(V3T<T> axis, T angle) {
  const T len = Scalar<T>::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
  if (len == T(0)) throw std::invalid_argument("rotation axis must be nonzero");
  const V3T<T> u = (T(1) / len) * axis;
  M3T<T> k;
  k.m[0][1] = -u.z;
  k.m[0][2] = u.y;
  k.m[1][0] = u.z;
  k.m[1][2] = -u.x;
  k.m[2][0] = -u.y;
  k.m[2][1] = u.x;
  const T c = Scalar<T>::cos(angle);
  const T s = Scalar<T>::sin(angle);
  const M3T<T> k2 = k * k;
  M3T<T> r = M3T<T>::identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = r.m[i][j] + s * k.m[i][j] + (T(1) - c) * k2.m[i][j];
  return r;
}

// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations,
// ascending.
template <class T>
std::array<T, 3> sym_eigenvalues(M3T<T> a) {
  for (int sweep = 0; sweep < 60; ++sweep) {
    const T off = Scalar<T>::abs(a.m[0][1]) + Scalar<T>::abs(a.m[0][2]) +
                  Scalar<T>::abs(a.m[1][2]);
    const T scale = Scalar<T>::abs(a.m[0][0]) + Scalar<T>::abs(a.m[1][1]) +
                    Scalar<T>::abs(a.m[2][2]) + off;
    if (off <= Scalar<T>::eps() * scale) break;
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pq : pairs) {
      const int p = pq[0];
      const int q = pq[1];
      if (Scalar<T>::abs(a.m[p][q]) == T(0)) continue;
      const T th = (a.m[q][q] - a.m[p][p]) / (T(2) * a.m[p][q]);
      const T sign = th >= T(0) ? T(1) : T(-1);
      const T t = sign / (Scalar<T>::abs(th) + Scalar<T>::sqrt(th * th + T(1)));
      const T c = T(1) / Scalar<T>::sqrt(t * t + T(1));
      const T s = t * c;
      M3T<T> j = M3T<T>::identity();
      j.m[p][p] = c;
      j.m[q][q] = c;
      j.m[p][q] = s;
      j.m[q][p] = -s;
      a = j.transpose() * a * j;
    }
  }
  std::array<T, 3> ev{a.m[0][0], a.m[1][1], a.m[2][2]};
  if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
  if (ev[1] > ev[2]) std::swap(ev[1], ev[2]);
  if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
  return ev;
}

template <class T>
std::array<T, 3> singular_values_core(const M3T<T>& a) {
  const M3T<T> gram = a.transpose() * a;
  std::array<T, 3> ev = sym_eigenvalues(gram);
  for (T& v : ev) v = v > T(0) ? Scalar<T>::sqrt(v) : T(0);
  return ev;
}

// ---------------------------------------------------------------------------
// Construction core (scalar-generic)
// ---------------------------------------------------------------------------

template <class T>
struct CoreSimplex {
  std::array<V3T<T>, 4> vs;
  std::array<V3T<T>, 4> ims;
  M3T<T> a;
  V3T<T> b;
  T vol{};
};

template <class T>
struct Core {
  std::array<V3T<T>, 4> outer;
  std::array<V3T<T>, 4> inner;
  std::array<V3T<T>, 4> inner_image;
  M3T<T> twist;
  std::array<CoreSimplex<T>, 14> simplices;
  T total_volume{};
};

template <class T>
CoreSimplex<T> make_simplex(const std::array<V3T<T>, 4>& vs,
                            const std::array<V3T<T>, 4>& ims) {
  CoreSimplex<T> s;
  s.vs = vs;
  s.ims = ims;
  const M3T<T> ev = M3T<T>::from_columns(vs[1] - vs[0], vs[2] - vs[0], vs[3] - vs[0]);
  const M3T<T> ei =
      M3T<T>::from_columns(ims[1] - ims[0], ims[2] - ims[0], ims[3] - ims[0]);
  s.a = ei * inverse(ev);
  s.b = ims[0] - s.a.apply(vs[0]);
  s.vol = Scalar<T>::abs(ev.det()) / T(6);
  return s;
}

template <class T>
Core<T> build_core(TetraAxis axis, T theta, T r) {
  Core<T> core;
  core.outer = {V3T<T>{T(1), T(1), T(1)}, V3T<T>{T(1), T(-1), T(-1)},
                V3T<T>{T(-1), T(1), T(-1)}, V3T<T>{T(-1), T(-1), T(1)}};
  const V3T<T> u = axis == TetraAxis::X3 ? V3T<T>{T(0), T(0), T(1)}
                                         : V3T<T>{T(1), T(1), T(1)};
  const M3T<T> back = rodrigues(u, -theta);
  core.twist = rodrigues(u, T(2) * theta);
  for (int i = 0; i < 4; ++i) {
    core.inner[i] = r * back.apply(negate(core.outer[i]));
    core.inner_image[i] = core.twist.apply(core.inner[i]);
  }

  const auto& v = core.outer;
  const auto& w = core.inner;
  const auto& wp = core.inner_image;
  int slot = 0;
  for (int i = 0; i < 4; ++i) {
    std::array<V3T<T>, 4> vs{w[i]};
    std::array<V3T<T>, 4> ims{wp[i]};
    int at = 1;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      vs[at] = v[j];
      ims[at] = v[j];
      ++at;
    }
    core.simplices[slot++] = make_simplex(vs, ims);
  }
  for (int i = 0; i < 4; ++i) {
    std::array<V3T<T>, 4> vs{v[i]};
    std::array<V3T<T>, 4> ims{v[i]};
    int at = 1;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      vs[at] = w[j];
      ims[at] = wp[j];
      ++at;
    }
    core.simplices[slot++] = make_simplex(vs, ims);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      int cd[2];
      int at = 0;
      for (int j = 0; j < 4; ++j) {
        if (j != a && j != b) cd[at++] = j;
      }
      const std::array<V3T<T>, 4> vs{v[a], v[b], w[cd[0]], w[cd[1]]};
      const std::array<V3T<T>, 4> ims{v[a], v[b], wp[cd[0]], wp[cd[1]]};
      core.simplices[slot++] = make_simplex(vs, ims);
    }
  }

  core.total_volume = T(0);
  for (const auto& s : core.simplices) core.total_volume = core.total_volume + s.vol;
  return core;
}

void check_domain(TetraAxis axis, double theta, double r) {
  if (!(r > 0.0) || !(r < 1.0 / 3.0)) {
    throw std::invalid_argument("shrink factor must lie in (0, 1/3)");
  }
  if (axis == TetraAxis::X3) {
    if (!(theta > 0.0) || !(theta < kPi / 2)) {
      throw std::invalid_argument("x3 twist angle must lie in (0, pi/2)");
    }
  } else {
    if (!(theta > -kPi / 2) || !(theta < kPi / 2)) {
      throw std::invalid_argument("vertex twist angle must lie in (-pi/2, pi/2)");
    }
  }
}

Vec3 to_vec3(V3T<double> v) { return {v.x, v.y, v.z}; }

Mat3 to_mat3(const M3T<double>& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j];
  return r;
}

M3T<double> from_mat3(const Mat3& a) {
  M3T<double> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j];
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public vector / matrix operations
// ---------------------------------------------------------------------------

Vec3 operator+(Vec3 u, Vec3 v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
Vec3 operator-(Vec3 u, Vec3 v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
double dot3(Vec3 u, Vec3 v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
double norm3(Vec3 v) { return std::sqrt(dot3(v, v)); }

Mat3 Mat3::identity() { return to_mat3(M3T<double>::identity()); }

Mat3 Mat3::from_columns(Vec3 c0, Vec3 c1, Vec3 c2) {
  return to_mat3(M3T<double>::from_columns({c0.x, c0.y, c0.z}, {c1.x, c1.y, c1.z},
                                           {c2.x, c2.y, c2.z}));
}

Mat3 Mat3::transpose() const { return to_mat3(from_mat3(*this).transpose()); }

double Mat3::det() const { return from_mat3(*this).det(); }

double Mat3::max_abs() const {
  double worst = 0.0;
  for (const auto& row : m)
    for (double v : row) worst = std::max(worst, std::fabs(v));
  return worst;
}

Vec3 Mat3::apply(Vec3 v) const { return to_vec3(from_mat3(*this).apply({v.x, v.y, v.z})); }

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  return to_mat3(from_mat3(a) * from_mat3(b));
}

Mat3 rotation_about(Vec3 axis, double angle) {
  return to_mat3(rodrigues<double>({axis.x, axis.y, axis.z}, angle));
}

std::array<double, 3> singular_values3(const Mat3& a) {
  return singular_values_core(from_mat3(a));
}

bool tetra_contains(const std::array<Vec3, 4>& vertices, Vec3 p, double tol) {
  const M3T<double> ev = M3T<double>::from_columns(
      {vertices[1].x - vertices[0].x, vertices[1].y - vertices[0].y,
       vertices[1].z - vertices[0].z},
      {vertices[2].x - vertices[0].x, vertices[2].y - vertices[0].y,
       vertices[2].z - vertices[0].z},
      {vertices[3].x - vertices[0].x, vertices[3].y - vertices[0].y,
       vertices[3].z - vertices[0].z});
  const V3T<double> rhs{p.x - vertices[0].x, p.y - vertices[0].y, p.z - vertices[0].z};
  const V3T<double> lambda = inverse(ev).apply(rhs);
  const double sum = lambda.x + lambda.y + lambda.z;
  return lambda.x >= -tol && lambda.y >= -tol && lambda.z >= -tol && sum <= 1.0 + tol;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

const std::array<std::string, 14>& simplex_names() {
  static const std::array<std::string, 14> names = {
      "capA1", "capA2", "capA3", "capA4", "capB1",  "capB2",  "capB3",
      "capB4", "edge12", "edge13", "edge14", "edge23", "edge24", "edge34"};
  return names;
}

TetraConstruction build_tetra(TetraAxis axis, double theta, double r) {
  check_domain(axis, theta, r);
  const Core<double> core = build_core<double>(axis, theta, r);

  TetraConstruction out;
  out.axis = axis;
  out.theta = theta;
  out.r = r;
  for (int i = 0; i < 4; ++i) {
    out.outer[i] = to_vec3(core.outer[i]);
    out.inner[i] = to_vec3(core.inner[i]);
    out.inner_image[i] = to_vec3(core.inner_image[i]);
  }
  out.twist = to_mat3(core.twist);
  out.simplices.reserve(14);
  for (int i = 0; i < 14; ++i) {
    const CoreSimplex<double>& cs = core.simplices[i];
    Simplex3 s;
    s.name = simplex_names()[i];
    for (int k = 0; k < 4; ++k) {
      s.domain[k] = to_vec3(cs.vs[k]);
      s.image[k] = to_vec3(cs.ims[k]);
    }
    s.gradient = to_mat3(cs.a);
    s.offset = to_vec3(cs.b);
    s.volume = cs.vol;
    out.simplices.push_back(std::move(s));
  }
  const double expected = (8.0 / 3.0) * (1.0 - r * r * r);
  out.tiling_residual = std::fabs(core.total_volume - expected) / expected;
  out.tiling_ok = out.tiling_residual <= 1e-12;
  return out;
}

TetraConstruction build_x3(double theta, double r) {
  return build_tetra(TetraAxis::X3, theta, r);
}

TetraConstruction build_vertex(double theta, double r) {
  return build_tetra(TetraAxis::Vertex, theta, r);
}

// ---------------------------------------------------------------------------
// Singular-value scan
// ---------------------------------------------------------------------------

namespace {

// Fills the singular values and residual aggregates of one cell at scalar
// type T.  The two rigid pieces of the vertex construction are compared
// against their exact motions instead of entering the disparity.
template <class T>
void eval_cell(TetraAxis axis, double theta, double r, TetraScanCell& cell) {
  const Core<T> core = build_core<T>(axis, T(theta), T(r));
  const bool vertex = axis == TetraAxis::Vertex;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double det_res = 0.0;
  double mid_res = 0.0;
  double aust = 0.0;
  for (int i = 0; i < 14; ++i) {
    const CoreSimplex<T>& s = core.simplices[i];
    const std::array<T, 3> sv = singular_values_core(s.a);
    cell.sigma_min[i] = static_cast<double>(sv[0]);
    cell.sigma_mid[i] = static_cast<double>(sv[1]);
    cell.sigma_max[i] = static_cast<double>(sv[2]);
    const bool rigid = vertex && (i == 0 || i == 4);
    if (rigid) {
      const M3T<T> expected = i == 0 ? M3T<T>::identity() : core.twist;
      aust = std::max(aust, static_cast<double>(max_abs_diff(s.a, expected)));
      continue;
    }
    lo = std::min(lo, cell.sigma_min[i]);
    hi = std::max(hi, cell.sigma_min[i]);
    det_res = std::max(det_res, std::fabs(static_cast<double>(s.a.det()) - 1.0));
    mid_res = std::max(mid_res, std::fabs(cell.sigma_mid[i] - 1.0));
  }
  cell.theta = theta;
  cell.r = r;
  cell.disparity = hi - lo;
  cell.det_residual = det_res;
  cell.sigma_mid_residual = mid_res;
  cell.austenite_residual = aust;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
  }
  return out;
}

}  // namespace

TetraScanWindow default_scan_window() {
  return {0.05, kPi / 2 - 0.05, 0.02, 0.31};
}

TetraScanResult scan_singular_values(TetraAxis axis, int theta_steps, int r_steps,
                                     const TetraScanWindow& window) {
  if (theta_steps < 1 || r_steps < 1) {
    throw std::invalid_argument("scan grid needs at least one step per axis");
  }
  if (window.theta_max < window.theta_min || window.r_max < window.r_min) {
    throw std::invalid_argument("scan window bounds are reversed");
  }
  check_domain(axis, window.theta_min, window.r_min);
  check_domain(axis, window.theta_max, window.r_max);

  TetraScanResult result;
  result.axis = axis;
  result.thetas = linspace(window.theta_min, window.theta_max, theta_steps);
  result.rs = linspace(window.r_min, window.r_max, r_steps);
  result.cells.resize(result.thetas.size() * result.rs.size());
  result.min_disparity = std::numeric_limits<double>::infinity();

  for (std::size_t it = 0; it < result.thetas.size(); ++it) {
    for (std::size_t ir = 0; ir < result.rs.size(); ++ir) {
      TetraScanCell& cell = result.cells[it * result.rs.size() + ir];
      eval_cell<double>(axis, result.thetas[it], result.rs[ir], cell);
      const bool suspicious = cell.det_residual > 1e-13 ||
                              cell.sigma_mid_residual > 1e-11 ||
                              cell.austenite_residual > 1e-13;
      if (suspicious) {
        eval_cell<__float128>(axis, result.thetas[it], result.rs[ir], cell);
        cell.refined = true;
      }
      result.min_disparity = std::min(result.min_disparity, cell.disparity);
      result.worst_det_residual = std::max(result.worst_det_residual, cell.det_residual);
      result.worst_sigma_mid_residual =
          std::max(result.worst_sigma_mid_residual, cell.sigma_mid_residual);
      result.worst_austenite_residual =
          std::max(result.worst_austenite_residual, cell.austenite_residual);
    }
  }
  return result;
}

TetraScanResult scan_singular_values(TetraAxis axis, int theta_steps, int r_steps) {
  return scan_singular_values(axis, theta_steps, r_steps, default_scan_window());
}

}  // namespace ngonstar
