#include "ngonstar/cli.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "ngonstar/io.hpp"
#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/onion.hpp"
#include "ngonstar/single_layer.hpp"
#include "ngonstar/tetra3d.hpp"
#include "ngonstar/verify.hpp"
#include "ngonstar/version.hpp"

namespace ngonstar {

namespace {

constexpr double kTwoPi = 6.283185307179586;

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::string command_line = kToolName;
  for (int i = 1; i < argc; ++i) {
    command_line += " ";
    command_line += argv[i];
  }

  CLI::App app{"piecewise-affine star constructions and their verification"};
  // Help is exposed as --help only: the linearize subcommand takes a --h
  // option (the finite-difference step), which would collide with a short
  // "-h" help flag.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  // --- construct -----------------------------------------------------------
  auto* construct =
      app.add_subcommand("construct", "build one ring and report geometry and checks");
  int c_n = 0;
  double c_alpha = 0.0;
  double c_tol = 1e-10;
  std::string c_format = "json";
  std::string c_out;
  std::uint64_t c_seed = 7;
  construct->add_option("--n", c_n, "number of outer vertices (>= 3)")->required();
  construct->add_option("--alpha", c_alpha, "asymmetry parameter in (0, 1)")->required();
  construct->add_option("--tol", c_tol, "verification tolerance for the pass flag");
  construct->add_option("--format", c_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  construct->add_option("--out", c_out, "output path (stdout when omitted)");
  construct->add_option("--seed", c_seed, "seed stamped into the output header");

  // --- star ------------------------------------------------------------------
  auto* star = app.add_subcommand("star", "render the layered construction");
  int s_n = 0;
  double s_alpha = 0.0;
  int s_layers = 0;
  std::string s_format = "svg";
  std::string s_out;
  std::uint64_t s_seed = 7;
  star->add_option("--n", s_n, "number of outer vertices (>= 3)")->required();
  star->add_option("--alpha", s_alpha, "asymmetry parameter in (0, 1)")->required();
  star->add_option("--layers", s_layers, "layer count (0 = resolve to radius 1/2)");
  star->add_option("--format", s_format, "svg drawing or per-layer energy csv")
      ->check(CLI::IsMember({"svg", "csv"}));
  star->add_option("--out", s_out, "output path (stdout when omitted)");
  star->add_option("--seed", s_seed, "seed stamped into the output header");

  // --- limit -----------------------------------------------------------------
  auto* limit = app.add_subcommand("limit", "sample the limiting field on a polar grid");
  double l_alpha = 0.0;
  PolarGrid l_grid{0.5, 1.0, 9, 0.0, kTwoPi, 13};
  std::string l_format = "csv";
  std::string l_out;
  std::uint64_t l_seed = 7;
  limit->add_option("--alpha", l_alpha, "asymmetry parameter in (0, 1)")->required();
  limit->add_option("--r-min", l_grid.r_min, "smallest sampling radius");
  limit->add_option("--r-max", l_grid.r_max, "largest sampling radius");
  limit->add_option("--r-steps", l_grid.r_steps, "radial sample count");
  limit->add_option("--theta-min", l_grid.theta_min, "smallest sampling angle");
  limit->add_option("--theta-max", l_grid.theta_max, "largest sampling angle");
  limit->add_option("--theta-steps", l_grid.theta_steps, "angular sample count");
  limit->add_option("--format", l_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  limit->add_option("--out", l_out, "output path (stdout when omitted)");
  limit->add_option("--seed", l_seed, "seed stamped into the output header");

  // --- linearize ---------------------------------------------------------------
  auto* linearize =
      app.add_subcommand("linearize", "export strain wells or the vortex field");
  linearize->set_help_flag("--help", "print this help message and exit");
  int z_n = 0;
  double z_h = 1e-4;
  std::string z_field = "strains";
  PolarGrid z_grid{0.5, 2.0, 7, 0.0, kTwoPi, 13};
  std::string z_out;
  std::uint64_t z_seed = 7;
  linearize->add_option("--n", z_n, "number of outer vertices (>= 3)")->required();
  linearize->add_option("--h", z_h, "finite-difference step (0 < h <= 1e-3)");
  linearize->add_option("--field", z_field, "which field to export")
      ->check(CLI::IsMember({"strains", "vortex"}));
  linearize->add_option("--r-min", z_grid.r_min, "smallest sampling radius");
  linearize->add_option("--r-max", z_grid.r_max, "largest sampling radius");
  linearize->add_option("--r-steps", z_grid.r_steps, "radial sample count");
  linearize->add_option("--theta-min", z_grid.theta_min, "smallest sampling angle");
  linearize->add_option("--theta-max", z_grid.theta_max, "largest sampling angle");
  linearize->add_option("--theta-steps", z_grid.theta_steps, "angular sample count");
  linearize->add_option("--out", z_out, "output path (stdout when omitted)");
  linearize->add_option("--seed", z_seed, "seed stamped into the output header");

  // --- scan3d ------------------------------------------------------------------
  auto* scan3d =
      app.add_subcommand("scan3d", "singular-value scan of the 3D construction");
  std::string t_axis = "x3";
  const TetraScanWindow default_window = default_scan_window();
  TetraScanWindow t_window = default_window;
  int t_theta_steps = 50;
  int t_r_steps = 50;
  std::string t_format = "csv";
  std::string t_out;
  std::uint64_t t_seed = 7;
  scan3d->add_option("--axis", t_axis, "twist axis")
      ->check(CLI::IsMember({"x3", "vertex"}));
  scan3d->add_option("--theta-min", t_window.theta_min, "smallest twist angle");
  scan3d->add_option("--theta-max", t_window.theta_max, "largest twist angle");
  scan3d->add_option("--theta-steps", t_theta_steps, "twist angle sample count");
  scan3d->add_option("--r-min", t_window.r_min, "smallest shrink factor");
  scan3d->add_option("--r-max", t_window.r_max, "largest shrink factor");
  scan3d->add_option("--r-steps", t_r_steps, "shrink factor sample count");
  scan3d->add_option("--format", t_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan3d->add_option("--out", t_out, "output path (stdout when omitted)");
  scan3d->add_option("--seed", t_seed, "seed stamped into the output header");

  // --- verify --------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all";
  std::uint64_t v_seed = 7;
  std::string v_out;
  verify->add_option("--suite", v_suite, "suite name: all or appendix");
  verify->add_option("--seed", v_seed, "seed for the randomized checks");
  verify->add_option("--out", v_out, "also write the report to this path");

  // --- roots -----------------------------------------------------------------------
  auto* roots = app.add_subcommand("roots", "quartic root report for one (n, alpha)");
  int r_n = 0;
  double r_alpha = 0.0;
  std::string r_format = "json";
  std::string r_out;
  std::uint64_t r_seed = 7;
  roots->add_option("--n", r_n, "number of outer vertices (>= 3)")->required();
  roots->add_option("--alpha", r_alpha, "asymmetry parameter in (0, 1)")->required();
  roots->add_option("--format", r_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  roots->add_option("--out", r_out, "output path (stdout when omitted)");
  roots->add_option("--seed", r_seed, "seed stamped into the output header");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto emit = [&](const std::string& content, const std::string& path) -> bool {
    if (path.empty()) {
      out << content;
      return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file: " << path << "\n";
      return false;
    }
    file << content;
    return static_cast<bool>(file);
  };

  try {
    if (*construct) {
      const OutputMeta meta{command_line, c_seed};
      const NGonConfig config = build_config(c_n, c_alpha);
      const std::string content = c_format == "json"
                                      ? render_construct_json(config, meta, c_tol)
                                      : render_construct_csv(config, meta);
      if (!emit(content, c_out)) return 2;
      const ConditionReport report =
          verify_conditions(build_single_layer(config), c_tol);
      return report.pass ? 0 : 1;
    }
    if (*star) {
      const OutputMeta meta{command_line, s_seed};
      std::string content;
      if (s_format == "svg") {
        content = render_star_svg(build_onion(s_n, s_alpha, s_layers), meta);
      } else {
        const EnergyReport energy = energy_report(s_n, s_alpha, s_layers);
        const NoniterabilityGap gap = noniterability_gap(s_n, s_alpha);
        content = render_star_csv(energy, gap, mismatch_norm(s_n, s_alpha), meta);
      }
      return emit(content, s_out) ? 0 : 2;
    }
    if (*limit) {
      const OutputMeta meta{command_line, l_seed};
      const std::string content = l_format == "csv"
                                      ? render_limit_csv(l_alpha, l_grid, meta)
                                      : render_limit_json(l_alpha, l_grid, meta);
      return emit(content, l_out) ? 0 : 2;
    }
    if (*linearize) {
      const OutputMeta meta{command_line, z_seed};
      const std::string content =
          z_field == "strains" ? render_linearize_strains_csv(z_n, z_h, meta)
                               : render_linearize_vortex_csv(z_grid, meta);
      return emit(content, z_out) ? 0 : 2;
    }
    if (*scan3d) {
      const OutputMeta meta{command_line, t_seed};
      const TetraAxis axis = t_axis == "x3" ? TetraAxis::X3 : TetraAxis::Vertex;
      const TetraScanResult scan =
          scan_singular_values(axis, t_theta_steps, t_r_steps, t_window);
      const std::string content = t_format == "csv" ? render_scan3d_csv(scan, meta)
                                                    : render_scan3d_json(scan, meta);
      return emit(content, t_out) ? 0 : 2;
    }
    if (*verify) {
      const VerifyReport report = run_verify(v_suite, v_seed);
      out << report.text;
      if (!v_out.empty()) {
        std::ofstream file(v_out, std::ios::binary);
        if (!file) {
          err << "error: cannot open output file: " << v_out << "\n";
          return 2;
        }
        file << report.text;
      }
      return report.all_pass ? 0 : 1;
    }
    if (*roots) {
      const OutputMeta meta{command_line, r_seed};
      const std::string content = r_format == "json"
                                      ? render_roots_json(r_n, r_alpha, meta)
                                      : render_roots_csv(r_n, r_alpha, meta);
      return emit(content, r_out) ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ngonstar
