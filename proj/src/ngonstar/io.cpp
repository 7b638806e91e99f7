#include "ngonstar/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "ngonstar/limit_field.hpp"
#include "ngonstar/linearized.hpp"
#include "ngonstar/version.hpp"
#include "ngonstar/wells.hpp"

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

using ordered_json = nlohmann::ordered_json;

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

ordered_json json_meta(const OutputMeta& meta) {
  ordered_json m;
  m["tool"] = kToolName;
  m["version"] = kVersion;
  m["command"] = meta.command_line;
  m["seed"] = meta.seed;
  return m;
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

void check_polar_grid(const PolarGrid& grid, bool radius_positive) {
  if (grid.r_steps < 1 || grid.theta_steps < 1) {
    throw std::invalid_argument("sampling grid needs at least one step per axis");
  }
  if (grid.r_max < grid.r_min || grid.theta_max < grid.theta_min) {
    throw std::invalid_argument("sampling grid bounds are reversed");
  }
  if (radius_positive && !(grid.r_min > 0.0)) {
    throw std::invalid_argument("sampling radius must be positive");
  }
}

ordered_json vec_json(Vec2 v) { return ordered_json::array({v.x, v.y}); }

ordered_json mat_json(const Mat2& m) {
  return ordered_json::array(
      {ordered_json::array({m.a11, m.a12}), ordered_json::array({m.a21, m.a22})});
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

// ---------------------------------------------------------------------------
// Formatting primitives
// ---------------------------------------------------------------------------

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), result.ptr);
}

std::string csv_header(const OutputMeta& meta) {
  std::string out;
  out += "# tool: ";
  out += kToolName;
  out += " ";
  out += kVersion;
  out += "\n# command: ";
  out += meta.command_line;
  out += "\n# seed: ";
  out += std::to_string(meta.seed);
  out += "\n";
  return out;
}

const std::array<std::string, 256>& cyclic_colormap() {
  static const std::array<std::string, 256> table = [] {
    std::array<std::string, 256> t;
    for (int i = 0; i < 256; ++i) {
      const double h6 = 6.0 * i / 256.0;
      const int sector = static_cast<int>(h6) % 6;
      const double f = h6 - std::floor(h6);
      const double value = 0.95;
      const double sat = 0.85;
      const double p = value * (1.0 - sat);
      const double q = value * (1.0 - sat * f);
      const double u = value * (1.0 - sat * (1.0 - f));
      double rgb[3] = {0.0, 0.0, 0.0};
      switch (sector) {
        case 0: rgb[0] = value; rgb[1] = u; rgb[2] = p; break;
        case 1: rgb[0] = q; rgb[1] = value; rgb[2] = p; break;
        case 2: rgb[0] = p; rgb[1] = value; rgb[2] = u; break;
        case 3: rgb[0] = p; rgb[1] = q; rgb[2] = value; break;
        case 4: rgb[0] = u; rgb[1] = p; rgb[2] = value; break;
        default: rgb[0] = value; rgb[1] = p; rgb[2] = q; break;
      }
      char hex[8];
      std::snprintf(hex, sizeof(hex), "#%02x%02x%02x",
                    static_cast<int>(std::lround(rgb[0] * 255.0)),
                    static_cast<int>(std::lround(rgb[1] * 255.0)),
                    static_cast<int>(std::lround(rgb[2] * 255.0)));
      t[i] = hex;
    }
    return t;
  }();
  return table;
}

const std::string& color_for_angle(double angle) {
  double wrapped = std::fmod(angle, kPi);
  if (wrapped < 0.0) wrapped += kPi;
  int idx = static_cast<int>(wrapped / kPi * 256.0);
  idx &= 255;
  return cyclic_colormap()[static_cast<std::size_t>(idx)];
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

std::string render_construct_json(const NGonConfig& config, const OutputMeta& meta,
                                  double tol) {
  const ShellGradients grads = shell_gradients(config);
  const PiecewiseAffineMap map = build_single_layer(config);
  const ConditionReport report = verify_conditions(map, tol);

  ordered_json j;
  j["meta"] = json_meta(meta);
  j["n"] = config.n;
  j["alpha"] = config.alpha;
  j["r_outer"] = config.r_outer;
  j["r_inner"] = config.r_inner;
  j["radius_ratio"] = radius_ratio(config.n, config.alpha);
  j["stretch"] = mat_json(grads.stretch);
  j["edge_ratio"] = config.a;
  j["l1"] = config.l1;
  j["l2"] = config.l2;
  j["phi"] = config.phi;
  j["near_degenerate"] = config.near_degenerate;
  j["tiling_residual"] = tiling_residual(config);
  j["outer_angle"] = grads.outer_angle;
  j["inner_angle"] = grads.inner_angle;
  j["outer_angle_closed_form"] = beta0_angle(config.n, config.a);

  ordered_json outer = ordered_json::array();
  for (const Vec2& v : config.outer) outer.push_back(vec_json(v));
  j["outer_vertices"] = outer;
  ordered_json inner = ordered_json::array();
  for (const Vec2& v : config.inner) inner.push_back(vec_json(v));
  j["inner_vertices"] = inner;
  ordered_json tris = ordered_json::array();
  for (const auto& t : config.triangles) {
    tris.push_back(ordered_json::array({t[0], t[1], t[2]}));
  }
  j["triangles"] = tris;

  ordered_json checks;
  checks["tolerance"] = tol;
  checks["continuity_residual"] = report.continuity_residual;
  checks["exterior_residual"] = report.exterior_residual;
  checks["well_distance"] = report.well_distance;
  checks["inner_angle_residual"] = report.inner_angle_residual;
  checks["flip_residual"] = report.flip_residual;
  checks["pass"] = report.pass;
  j["single_layer_checks"] = checks;
  return json_text(j);
}

std::string render_construct_csv(const NGonConfig& config, const OutputMeta& meta) {
  const ShellGradients grads = shell_gradients(config);
  std::string out = csv_header(meta);
  out += "# n: " + std::to_string(config.n) + "\n";
  out += "# alpha: " + format_double(config.alpha) + "\n";
  out += "# r_outer: " + format_double(config.r_outer) + "\n";
  out += "# r_inner: " + format_double(config.r_inner) + "\n";
  out += "# edge_ratio: " + format_double(config.a) + "\n";
  out += "# outer_angle: " + format_double(grads.outer_angle) + "\n";
  out += "# inner_angle: " + format_double(grads.inner_angle) + "\n";
  out += "kind,index,x,y\n";
  for (std::size_t i = 0; i < config.outer.size(); ++i) {
    out += "outer," + std::to_string(i + 1) + "," + format_double(config.outer[i].x) +
           "," + format_double(config.outer[i].y) + "\n";
  }
  for (std::size_t i = 0; i < config.inner.size(); ++i) {
    out += "inner," + std::to_string(i + 1) + "," + format_double(config.inner[i].x) +
           "," + format_double(config.inner[i].y) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// star
// ---------------------------------------------------------------------------

std::string render_star_svg(const PiecewiseAffineMap& map, const OutputMeta& meta) {
  const double anisotropy = nlce_anisotropy(map.n, map.alpha);
  const double scale = std::pow(anisotropy, 1.0 / 12.0);

  struct Shape {
    std::vector<Vec2> points;
    std::string fill;
  };
  std::vector<Shape> deformed;
  std::vector<std::vector<Vec2>> reference;

  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  bool first = true;
  auto bound = [&](Vec2 p) {
    if (first) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      first = false;
      return;
    }
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };

  for (const AffinePiece& piece : map.pieces) {
    if (piece.kind == PieceKind::Exterior) continue;
    Shape shape;
    shape.points.reserve(piece.polygon.size());
    for (const Vec2& v : piece.polygon) {
      const Vec2 image = scale * piece.apply(v);
      shape.points.push_back(image);
      bound(image);
    }
    const Director dir = director(piece.gradient);
    shape.fill = dir.degenerate ? std::string("#888888") : color_for_angle(dir.angle);
    deformed.push_back(std::move(shape));

    std::vector<Vec2> ref(piece.polygon.begin(), piece.polygon.end());
    for (const Vec2& v : ref) bound(v);
    reference.push_back(std::move(ref));
  }

  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double pad = 0.05 * span;
  const double stroke = 0.003 * span;

  auto points_attr = [](const std::vector<Vec2>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) s += " ";
      s += format_double(pts[i].x) + "," + format_double(-pts[i].y);
    }
    return s;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += format_double(lo_x - pad) + " " + format_double(-hi_y - pad) + " " +
         format_double(hi_x - lo_x + 2 * pad) + " " +
         format_double(hi_y - lo_y + 2 * pad);
  svg += "\">\n";
  svg += "<!-- tool: ";
  svg += kToolName;
  svg += " ";
  svg += kVersion;
  svg += " -->\n";
  svg += "<!-- seed: " + std::to_string(meta.seed) + " -->\n";
  svg += "<!-- world y axis points up; it is negated once for rendering -->\n";
  svg += "<desc>command: " + xml_escape(meta.command_line) + "</desc>\n";

  svg += "<g id=\"deformed\" stroke=\"#222222\" stroke-width=\"" +
         format_double(stroke) + "\">\n";
  for (const Shape& shape : deformed) {
    svg += "<polygon fill=\"" + shape.fill + "\" points=\"" +
           points_attr(shape.points) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g id=\"reference\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" +
         format_double(0.6 * stroke) + "\" stroke-dasharray=\"" +
         format_double(3 * stroke) + " " + format_double(2 * stroke) + "\">\n";
  for (const auto& pts : reference) {
    svg += "<polygon points=\"" + points_attr(pts) + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string render_star_csv(const EnergyReport& energy, const NoniterabilityGap& gap,
                            double mismatch, const OutputMeta& meta) {
  std::string out = csv_header(meta);
  out += "# n: " + std::to_string(energy.n) + "\n";
  out += "# alpha: " + format_double(energy.alpha) + "\n";
  out += "# layers: " + std::to_string(energy.layers) + "\n";
  out += "# gap_outer: " + format_double(gap.outer) + "\n";
  out += "# gap_inner: " + format_double(gap.inner) + "\n";
  out += "# mismatch: " + format_double(mismatch) + "\n";
  out += "# elastic_total: " + format_double(energy.elastic) + "\n";
  out += "# bound_total: " + format_double(energy.bound) + "\n";
  out += "# surface: " + format_double(energy.surface) + "\n";
  out += "# ratio: " + format_double(energy.ratio) + "\n";
  out += "layer,elastic,bound\n";
  for (const LayerEnergy& layer : energy.per_layer) {
    out += std::to_string(layer.layer) + "," + format_double(layer.elastic) + "," +
           format_double(layer.bound_term) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------------

namespace {

struct LimitSample {
  double r = 0.0;
  double theta = 0.0;
  Vec2 x;
  Mat2 gradient;
  bool has_deformation = false;
  Vec2 deformation;
};

std::vector<LimitSample> sample_limit(double alpha, const PolarGrid& grid) {
  check_polar_grid(grid, true);
  const std::vector<double> rs = linspace(grid.r_min, grid.r_max, grid.r_steps);
  const std::vector<double> thetas =
      linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
  std::vector<LimitSample> samples;
  samples.reserve(rs.size() * thetas.size());
  for (double r : rs) {
    for (double theta : thetas) {
      LimitSample s;
      s.r = r;
      s.theta = theta;
      s.x = {r * std::cos(theta), r * std::sin(theta)};
      s.gradient = limit_gradient(alpha, s.x);
      if (r >= 0.5 - 1e-12 && r <= 1.0 + 1e-12) {
        s.has_deformation = true;
        s.deformation = limit_deformation(alpha, s.x);
      }
      samples.push_back(s);
    }
  }
  return samples;
}

}  // namespace

std::string render_limit_csv(double alpha, const PolarGrid& grid,
                             const OutputMeta& meta) {
  const std::vector<LimitSample> samples = sample_limit(alpha, grid);
  std::string out = csv_header(meta);
  out += "# alpha: " + format_double(alpha) + "\n";
  out += "r,theta,x1,x2,g11,g12,g21,g22,v1,v2\n";
  for (const LimitSample& s : samples) {
    out += format_double(s.r) + "," + format_double(s.theta) + "," +
           format_double(s.x.x) + "," + format_double(s.x.y) + "," +
           format_double(s.gradient.a11) + "," + format_double(s.gradient.a12) + "," +
           format_double(s.gradient.a21) + "," + format_double(s.gradient.a22) + ",";
    if (s.has_deformation) {
      out += format_double(s.deformation.x) + "," + format_double(s.deformation.y);
    } else {
      out += ",";
    }
    out += "\n";
  }
  return out;
}

std::string render_limit_json(double alpha, const PolarGrid& grid,
                              const OutputMeta& meta) {
  const std::vector<LimitSample> samples = sample_limit(alpha, grid);
  const LimitParams params = limit_params(alpha);
  ordered_json j;
  j["meta"] = json_meta(meta);
  j["alpha"] = alpha;
  ordered_json p;
  p["a"] = params.a;
  p["rho0"] = params.rho0;
  p["beta0"] = params.beta0;
  p["axis"] = vec_json(params.e);
  j["params"] = p;
  ordered_json arr = ordered_json::array();
  for (const LimitSample& s : samples) {
    ordered_json item;
    item["r"] = s.r;
    item["theta"] = s.theta;
    item["x"] = vec_json(s.x);
    item["gradient"] = mat_json(s.gradient);
    if (s.has_deformation) {
      item["deformation"] = vec_json(s.deformation);
    } else {
      item["deformation"] = nullptr;
    }
    arr.push_back(item);
  }
  j["samples"] = arr;
  return json_text(j);
}

// ---------------------------------------------------------------------------
// linearize
// ---------------------------------------------------------------------------

std::string render_linearize_strains_csv(int n, double h, const OutputMeta& meta) {
  const LinearizedShell shell = linearized_map(n, h);
  std::string out = csv_header(meta);
  out += "# n: " + std::to_string(n) + "\n";
  out += "# h: " + format_double(h) + "\n";
  out += "# strain_residual: " + format_double(shell.strain_residual) + "\n";
  out += "# exterior_sym_residual: " + format_double(shell.exterior_sym_residual) + "\n";
  out += "# inner_sym_residual: " + format_double(shell.inner_sym_residual) + "\n";
  out += "# tangential_jump: " + format_double(shell.tangential_jump) + "\n";
  out += "# orbit_count: " + std::to_string(orbit_count(n)) + "\n";
  out += "j,well_e11,well_e12,fd_e11,fd_e12,residual\n";
  for (int j = 1; j <= 2 * n; ++j) {
    const Strain2 well = strain_well(n, j);
    const Mat2& hat = shell.hat_strains[static_cast<std::size_t>(j - 1)];
    const double residual = (hat - well.matrix()).max_abs();
    out += std::to_string(j) + "," + format_double(well.e11) + "," +
           format_double(well.e12) + "," + format_double(hat.a11) + "," +
           format_double(hat.a12) + "," + format_double(residual) + "\n";
  }
  return out;
}

std::string render_linearize_vortex_csv(const PolarGrid& grid, const OutputMeta& meta) {
  check_polar_grid(grid, true);
  const std::vector<double> rs = linspace(grid.r_min, grid.r_max, grid.r_steps);
  const std::vector<double> thetas =
      linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
  std::string out = csv_header(meta);
  out += "r,theta,x1,x2,w1,w2,e11,e12,eig_low,eig_high\n";
  for (double r : rs) {
    for (double theta : thetas) {
      const Vec2 x{r * std::cos(theta), r * std::sin(theta)};
      const Vec2 w = log_vortex_value(x);
      const Mat2 e = log_vortex_strain(x);
      const double magnitude = std::hypot(e.a11, e.a12);
      out += format_double(r) + "," + format_double(theta) + "," + format_double(x.x) +
             "," + format_double(x.y) + "," + format_double(w.x) + "," +
             format_double(w.y) + "," + format_double(e.a11) + "," +
             format_double(e.a12) + "," + format_double(-magnitude) + "," +
             format_double(magnitude) + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// scan3d
// ---------------------------------------------------------------------------

namespace {

const char* axis_name(TetraAxis axis) {
  return axis == TetraAxis::X3 ? "x3" : "vertex";
}

}  // namespace

std::string render_scan3d_csv(const TetraScanResult& scan, const OutputMeta& meta) {
  std::string out = csv_header(meta);
  out += "# axis: ";
  out += axis_name(scan.axis);
  out += "\n";
  out += "# theta_steps: " + std::to_string(scan.thetas.size()) + "\n";
  out += "# r_steps: " + std::to_string(scan.rs.size()) + "\n";
  out += "# min_disparity: " + format_double(scan.min_disparity) + "\n";
  out += "# worst_det_residual: " + format_double(scan.worst_det_residual) + "\n";
  out += "# worst_sigma_mid_residual: " + format_double(scan.worst_sigma_mid_residual) +
         "\n";
  out += "# worst_austenite_residual: " +
         format_double(scan.worst_austenite_residual) + "\n";
  out += "theta,r,region_class,sigma_min,sigma_mid,sigma_max,cell_disparity,refined\n";
  for (const TetraScanCell& cell : scan.cells) {
    for (int i = 0; i < 14; ++i) {
      out += format_double(cell.theta) + "," + format_double(cell.r) + "," +
             simplex_names()[static_cast<std::size_t>(i)] + "," +
             format_double(cell.sigma_min[static_cast<std::size_t>(i)]) + "," +
             format_double(cell.sigma_mid[static_cast<std::size_t>(i)]) + "," +
             format_double(cell.sigma_max[static_cast<std::size_t>(i)]) + "," +
             format_double(cell.disparity) + "," + (cell.refined ? "1" : "0") + "\n";
    }
  }
  return out;
}

std::string render_scan3d_json(const TetraScanResult& scan, const OutputMeta& meta) {
  ordered_json j;
  j["meta"] = json_meta(meta);
  j["axis"] = axis_name(scan.axis);
  j["thetas"] = scan.thetas;
  j["rs"] = scan.rs;
  j["min_disparity"] = scan.min_disparity;
  j["worst_det_residual"] = scan.worst_det_residual;
  j["worst_sigma_mid_residual"] = scan.worst_sigma_mid_residual;
  j["worst_austenite_residual"] = scan.worst_austenite_residual;
  ordered_json cells = ordered_json::array();
  for (const TetraScanCell& cell : scan.cells) {
    ordered_json item;
    item["theta"] = cell.theta;
    item["r"] = cell.r;
    item["disparity"] = cell.disparity;
    item["det_residual"] = cell.det_residual;
    item["sigma_mid_residual"] = cell.sigma_mid_residual;
    item["austenite_residual"] = cell.austenite_residual;
    item["refined"] = cell.refined;
    cells.push_back(item);
  }
  j["cells"] = cells;
  return json_text(j);
}

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

std::string render_roots_json(int n, double alpha, const OutputMeta& meta) {
  const QuarticRootReport report = quartic_roots(n, alpha);
  const std::array<double, 5> coeffs = quartic_coefficients(n, alpha);
  ordered_json j;
  j["meta"] = json_meta(meta);
  j["n"] = n;
  j["alpha"] = alpha;
  j["coefficients"] = coeffs;
  ordered_json roots = ordered_json::array();
  for (const auto& root : report.roots) {
    ordered_json item;
    if (root.is_real && std::isfinite(root.value)) {
      item["value"] = root.value;
    } else {
      item["value"] = nullptr;
    }
    item["is_real"] = root.is_real;
    item["in_unit_interval"] = root.in_unit_interval;
    item["satisfies_relation"] = root.satisfies_relation;
    item["admissible"] = root.admissible();
    roots.push_back(item);
  }
  j["roots"] = roots;
  j["admissible_count"] = report.admissible_count;
  j["admissible_index"] = report.admissible_index;
  j["radius_ratio"] = radius_ratio(n, alpha);
  if (n >= 4) {
    const ThirdRootCheck check = third_root_negativity(n, alpha);
    ordered_json third;
    third["applicable"] = check.applicable;
    third["value"] = check.value;
    j["third_root_relation"] = third;
  }
  return json_text(j);
}

std::string render_roots_csv(int n, double alpha, const OutputMeta& meta) {
  const QuarticRootReport report = quartic_roots(n, alpha);
  const std::array<double, 5> coeffs = quartic_coefficients(n, alpha);
  std::string out = csv_header(meta);
  out += "# n: " + std::to_string(n) + "\n";
  out += "# alpha: " + format_double(alpha) + "\n";
  out += "# coefficients:";
  for (double c : coeffs) out += " " + format_double(c);
  out += "\n";
  out += "# admissible_count: " + std::to_string(report.admissible_count) + "\n";
  out += "# admissible_index: " + std::to_string(report.admissible_index) + "\n";
  out += "# radius_ratio: " + format_double(radius_ratio(n, alpha)) + "\n";
  out += "index,value,is_real,in_unit_interval,satisfies_relation,admissible\n";
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const auto& root = report.roots[i];
    out += std::to_string(i + 1) + "," + format_double(root.value) + "," +
           (root.is_real ? "1" : "0") + "," + (root.in_unit_interval ? "1" : "0") +
           "," + (root.satisfies_relation ? "1" : "0") + "," +
           (root.admissible() ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace ngonstar
