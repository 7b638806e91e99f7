#include "ngonstar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ngonstar/io.hpp"
#include "ngonstar/limit_field.hpp"
#include "ngonstar/linearized.hpp"
#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/onion.hpp"
#include "ngonstar/rng.hpp"
#include "ngonstar/single_layer.hpp"
#include "ngonstar/tetra3d.hpp"
#include "ngonstar/version.hpp"
#include "ngonstar/wells.hpp"

namespace ngonstar {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t sub_seed(std::uint64_t seed, int criterion) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(criterion);
}

std::string fd(double v) { return format_double(v); }

// --- criterion 1: anisotropy ratios of the nonlinear construction ---------

CheckLine criterion_anisotropy(std::uint64_t) {
  struct Target {
    int n;
    double alpha;
    double expected;
    double tol;
  };
  const std::vector<Target> targets = {{3, 0.1, 171.0, 1.0},
                                       {4, 0.1, 118.0, 1.0},
                                       {5, 0.1, 102.0, 1.0},
                                       {10, 0.1, 85.0, 1.0},
                                       {50, 0.35, 3.5, 0.05}};
  CheckLine line;
  line.criterion = 1;
  line.pass = true;
  std::string values;
  for (const Target& t : targets) {
    const double r = nlce_anisotropy(t.n, t.alpha);
    if (std::abs(r - t.expected) > t.tol) line.pass = false;
    if (!values.empty()) values += ", ";
    values += "r(" + std::to_string(t.n) + "," + fd(t.alpha) + ")=" + fd(r);
  }
  line.detail = "anisotropy ratios " + values +
                " against 171/118/102/85 (+-1) and 3.5 (+-0.05)";
  return line;
}

// --- criterion 2: single-layer construction over the parameter grid -------

CheckLine criterion_single_layer(std::uint64_t) {
  double worst_rank_one = 0.0;
  double worst_det = 0.0;
  double worst_well = 0.0;
  double worst_flip = 0.0;
  double worst_angle = 0.0;
  for (int n = 3; n <= 12; ++n) {
    for (int ai = 1; ai <= 9; ++ai) {
      const double alpha = ai / 10.0;
      const PiecewiseAffineMap map = build_single_layer(build_config(n, alpha));
      const InterfaceCheck faces = check_interfaces(map);
      const ConditionReport cond = verify_conditions(map);
      worst_rank_one = std::max(worst_rank_one, faces.rank_one_residual);
      worst_rank_one = std::max(worst_rank_one, faces.continuity_residual);
      worst_det = std::max(worst_det, faces.det_residual);
      worst_well = std::max(worst_well, cond.well_distance);
      worst_flip = std::max(worst_flip, cond.flip_residual);
      worst_angle = std::max(worst_angle, cond.inner_angle_residual);
    }
  }
  CheckLine line;
  line.criterion = 2;
  line.pass = worst_rank_one <= 1e-10 && worst_det <= 1e-12 && worst_well <= 1e-10 &&
              worst_flip <= 1e-12 && worst_angle <= 1e-12;
  line.detail = "n=3..12, alpha=0.1..0.9: rank-one/continuity " + fd(worst_rank_one) +
                " (<=1e-10), det " + fd(worst_det) + " (<=1e-12), well inclusion " +
                fd(worst_well) + " (<=1e-10), flip " + fd(worst_flip) +
                " (<=1e-12), turning angle " + fd(worst_angle) + " (<=1e-12)";
  return line;
}

// --- criterion 3: noniterability gap ---------------------------------------

CheckLine criterion_noniterability(std::uint64_t) {
  double worst_outer = 0.0;
  double least_inner = std::numeric_limits<double>::infinity();
  double worst_eig = 0.0;
  for (int n = 3; n <= 8; ++n) {
    for (double alpha : {0.2, 0.35, 0.47}) {
      const NoniterabilityGap gap = noniterability_gap(n, alpha);
      worst_outer = std::max(worst_outer, gap.outer);
      least_inner = std::min(least_inner, gap.inner);
      worst_eig = std::max(worst_eig, gap.eigenvector_residual);
    }
  }
  double worst_half = 0.0;
  for (int n = 3; n <= 8; ++n) {
    const NoniterabilityGap gap = noniterability_gap(n, 0.5);
    worst_half = std::max(worst_half, std::max(gap.outer, gap.inner_max));
  }
  CheckLine line;
  line.criterion = 3;
  line.pass = worst_outer <= 1e-10 && least_inner >= 1e-4 && worst_eig <= 1e-12 &&
              worst_half <= 1e-12;
  line.detail = "n=3..8, alpha in {0.2,0.35,0.47}: outer gap " + fd(worst_outer) +
                " (<=1e-10), least inner gap " + fd(least_inner) +
                " (>=1e-4), eigenvector residual " + fd(worst_eig) +
                " (<=1e-12); alpha=1/2 both gaps " + fd(worst_half) + " (<=1e-12)";
  return line;
}

// --- criterion 4: layer symmetries and their falsification ----------------

CheckLine criterion_symmetries(std::uint64_t) {
  double worst_identity = 0.0;
  for (int n = 3; n <= 8; ++n) {
    for (double alpha : {0.2, 0.35, 0.47}) {
      const LayerSymmetryReport rep = verify_layer_symmetries(n, alpha);
      worst_identity =
          std::max({worst_identity, rep.parity_residual, rep.iteration_residual});
    }
  }

  // Mutated versions of the identities must visibly fail: scaling one
  // gradient by 1.01 has to break the matching by a macroscopic margin.
  const ShellGradients even_grads = shell_gradients(build_config(6, 0.35));
  const double parity_mutation =
      (1.01 * even_grads.g[0] - even_grads.g[6]).max_abs();
  const ShellGradients odd_grads = shell_gradients(build_config(5, 0.35));
  const double transpose_mutation =
      (1.01 * odd_grads.g[0] - odd_grads.g[5].transpose()).max_abs();
  const double least_mutation = std::min(parity_mutation, transpose_mutation);

  CheckLine line;
  line.criterion = 4;
  line.pass = worst_identity <= 1e-12 && least_mutation >= 1e-3;
  line.detail = "layer-symmetry identities on n=3..8, alpha in {0.2,0.35,0.47}: worst " +
                fd(worst_identity) + " (<=1e-12); mutated identities deviate by " +
                fd(least_mutation) + " (>=1e-3)";
  return line;
}

// --- criterion 5: convergence to the limit field --------------------------

CheckLine criterion_convergence(std::uint64_t seed) {
  const std::vector<int> ns = {25, 50, 100, 200};
  bool conv_ok = true;
  std::string conv_values;
  for (double alpha : {0.2, 0.35}) {
    const ConvergenceResult conv = convergence_test(alpha, ns, 1000, sub_seed(seed, 5));
    for (std::size_t i = 1; i < conv.errors.size(); ++i) {
      if (!(conv.errors[i] < conv.errors[i - 1])) conv_ok = false;
    }
    if (!(conv.errors[3] <= conv.errors[1] / 3.0)) conv_ok = false;
    if (!conv_values.empty()) conv_values += "; ";
    conv_values += "alpha=" + fd(alpha) + ":";
    for (double e : conv.errors) conv_values += " " + fd(e);
  }

  double worst_fd = 0.0;
  double worst_norm = 0.0;
  double worst_membership = 0.0;
  Rng rng(sub_seed(seed, 55));
  for (double alpha : {0.2, 0.35}) {
    worst_fd = std::max(worst_fd,
                        verify_gradient_consistency(alpha, 200, 1e-5, sub_seed(seed, 6)));
    const LimitParams params = limit_params(alpha);
    for (int i = 0; i < 1000; ++i) {
      const double r = rng.uniform(0.5, 1.0);
      const double t = rng.uniform(0.0, 2.0 * kPi);
      const Vec2 x{r * std::cos(t), r * std::sin(t)};
      const Vec2 v = limit_deformation(alpha, x);
      worst_norm = std::max(worst_norm, std::abs(norm(v) - norm(x)));

      const double rm = rng.uniform(0.52, 0.98);
      const Vec2 xm{rm * std::cos(t), rm * std::sin(t)};
      const MembershipReport member =
          limit_membership(limit_gradient(alpha, xm), params.a, 1e-12);
      worst_membership = std::max(worst_membership, member.distance);
    }
  }

  CheckLine line;
  line.criterion = 5;
  line.pass = conv_ok && worst_fd <= 1e-8 && worst_norm <= 1e-12 &&
              worst_membership <= 1e-12;
  line.detail = "sup-errors over n=25/50/100/200 (" + conv_values +
                ") decrease with err(200)<=err(50)/3; finite-difference residual " +
                fd(worst_fd) + " (<=1e-8); norm preservation " + fd(worst_norm) +
                " (<=1e-12); limit-set membership " + fd(worst_membership) +
                " (<=1e-12)";
  return line;
}

// --- criterion 6: linearized theory ----------------------------------------

CheckLine criterion_linearized(std::uint64_t seed) {
  bool orbit_ok = true;
  for (int n = 3; n <= 15; n += 2) {
    if (orbit_count(n) != n) orbit_ok = false;
  }

  Rng rng(sub_seed(seed, 66));
  double worst_eigen = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Vec2 x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (norm(x) < 0.05) x = {x.x + 1.0, x.y + 1.0};
    const Mat2 e = log_vortex_strain(x);
    const double magnitude = std::hypot(e.a11, e.a12);
    worst_eigen = std::max(worst_eigen, std::abs(magnitude - 2.0));
  }

  double eikonal_measured = 0.0;
  double companion = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.3, 3.0);
    const double t = rng.uniform(0.0, 2.0 * kPi);
    const Vec2 x{r * std::cos(t), r * std::sin(t)};
    const Mat2 grad = log_vortex_gradient(x);
    eikonal_measured = std::max(
        eikonal_measured, std::abs(eikonal_residual((4.0 / 3.0) * grad, 0.25, 0.0)));
    companion =
        std::max(companion, std::abs(eikonal_residual((3.0 / 8.0) * grad, 0.25, 0.0)));
  }
  const bool eikonal_ok = eikonal_measured <= 1e-12;

  double worst_strain = 0.0;
  double worst_jump = 0.0;
  for (int n : {3, 5, 8}) {
    const LinearizedShell shell = linearized_map(n, 1e-4);
    worst_strain = std::max(worst_strain, shell.strain_residual);
    worst_strain = std::max(worst_strain, shell.exterior_sym_residual);
    worst_strain = std::max(worst_strain, shell.inner_sym_residual);
    worst_jump = std::max(worst_jump, shell.tangential_jump);
  }
  const double coarse = linearized_map(3, 2e-4).strain_residual;
  const double fine = linearized_map(3, 1e-4).strain_residual;
  const double richardson = coarse / fine;
  const bool strain_ok = worst_strain <= 1e-6 && worst_jump <= 1e-6 &&
                         richardson >= 3.5 && richardson <= 4.5;

  double worst_orbit_sym = 0.0;
  for (int n : {3, 5, 7, 9}) {
    const StrainSymmetryReport rep = strain_orbit_symmetries(n);
    worst_orbit_sym = std::max(
        {worst_orbit_sym, rep.anchor_residual, rep.set_residual, rep.shift_residual});
  }

  CheckLine line;
  line.criterion = 6;
  line.pass = orbit_ok && worst_eigen <= 1e-12 && eikonal_ok && strain_ok &&
              worst_orbit_sym <= 1e-12;
  line.detail = std::string("strain orbit counts equal n for odd n=3..15 (") +
                (orbit_ok ? "yes" : "no") + "); vortex strain eigenvalues +-2 within " +
                fd(worst_eigen) + " (<=1e-12); eikonal residual of the 4/3-scaled " +
                "vortex is " + fd(eikonal_measured) +
                " (required <=1e-12; the 3/8-scaled field gives " + fd(companion) +
                "); finite-difference strain inclusion " + fd(worst_strain) +
                " (<=1e-6) with step ratio " + fd(richardson) +
                " (expected ~4) and tangential jump " + fd(worst_jump) +
                "; orbit symmetries " + fd(worst_orbit_sym) + " (<=1e-12)";
  return line;
}

// --- criterion 7: quartic root analysis ------------------------------------

CheckLine criterion_quartic(std::uint64_t seed) {
  bool unique_ok = true;
  double worst_match = 0.0;
  for (int n = 3; n <= 50; ++n) {
    for (int ai = 1; ai <= 99; ++ai) {
      const double alpha = ai / 100.0;
      const QuarticRootReport report = quartic_roots(n, alpha);
      if (report.admissible_count != 1 || report.admissible_index != 0) {
        unique_ok = false;
        continue;
      }
      const double gap = std::abs(report.roots[0].value - radius_ratio(n, alpha));
      worst_match = std::max(worst_match, gap);
    }
  }

  double max_third = -std::numeric_limits<double>::infinity();
  for (int n = 5; n <= 50; ++n) {
    for (int ai = 1; ai <= 99; ++ai) {
      const double alpha = ai / 100.0;
      max_third = std::max(max_third, third_root_negativity(n, alpha).value);
    }
  }
  const bool third_ok = max_third < 0.0;

  Rng rng(sub_seed(seed, 7));
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 4 + static_cast<int>(rng.below(47));
    const double alpha = rng.uniform(0.01, 0.99);
    const QuarticRootReport report = quartic_roots(n, alpha);
    const auto& third = report.roots[2];
    if (!third.is_real || !third.in_unit_interval) continue;
    const bool relation_rejects = !third.satisfies_relation;
    const bool sign_rejects = third_root_negativity(n, alpha).value < 0.0;
    if (relation_rejects != sign_rejects || !relation_rejects) ++disagreements;
  }

  CheckLine line;
  line.criterion = 7;
  line.pass = unique_ok && worst_match <= 1e-10 && third_ok && disagreements == 0;
  line.detail = std::string("n=3..50, alpha=0.01..0.99: exactly one admissible root") +
                (unique_ok ? " (yes)" : " (no)") + " matching the radius ratio to " +
                fd(worst_match) + " (<=1e-10); third-root relation value stays " +
                "negative for n=5..50 (max " + fd(max_third) + "); " +
                std::to_string(disagreements) +
                " disagreements between the relation and sign tests over 10000 draws";
  return line;
}

// --- criterion 8: singular-value scan of the 3D construction ---------------

CheckLine criterion_scan3d(std::uint64_t) {
  const TetraScanResult x3 = scan_singular_values(TetraAxis::X3, 50, 50);
  const TetraScanResult vertex = scan_singular_values(TetraAxis::Vertex, 50, 50);
  const double worst_det = std::max(x3.worst_det_residual, vertex.worst_det_residual);
  const double worst_mid =
      std::max(x3.worst_sigma_mid_residual, vertex.worst_sigma_mid_residual);
  const double worst_aust = vertex.worst_austenite_residual;

  CheckLine line;
  line.criterion = 8;
  line.pass = worst_det <= 1e-12 && worst_mid <= 1e-10 && worst_aust <= 1e-12 &&
              x3.min_disparity > 1e-2 && vertex.min_disparity > 1e-2;
  line.detail = "50x50 scans: det residual " + fd(worst_det) +
                " (<=1e-12), middle singular value residual " + fd(worst_mid) +
                " (<=1e-10), rigid-piece residual " + fd(worst_aust) +
                " (<=1e-12); minimum disparity x3 " + fd(x3.min_disparity) +
                ", vertex " + fd(vertex.min_disparity) + " (required >1e-2 on both)";
  return line;
}

// --- criterion 9: energy scaling -------------------------------------------

CheckLine criterion_energy(std::uint64_t) {
  const EnergyReport single = energy_report(3, 0.47, 1);
  const bool single_ok = single.elastic <= 1e-20 && single.surface > 0.0;

  double lo_ratio = std::numeric_limits<double>::infinity();
  double hi_ratio = 0.0;
  for (int layers = 2; layers <= 6; ++layers) {
    const EnergyReport rep = energy_report(3, 0.47, layers);
    lo_ratio = std::min(lo_ratio, rep.ratio);
    hi_ratio = std::max(hi_ratio, rep.ratio);
  }
  const double spread = hi_ratio / lo_ratio;

  CheckLine line;
  line.criterion = 9;
  line.pass = single_ok && spread <= 2.0;
  line.detail = "single layer at (3, 0.47): elastic energy " + fd(single.elastic) +
                " (<=1e-20) with surface energy " + fd(single.surface) +
                " (>0); elastic/bound ratio over layers 2..6 spans [" + fd(lo_ratio) +
                ", " + fd(hi_ratio) + "], spread " + fd(spread) + " (<=2)";
  return line;
}

// --- appendix-only check ----------------------------------------------------

CheckLine check_reflection_conjugation() {
  double worst = 0.0;
  for (int n = 3; n <= 12; ++n) {
    for (int ai = 1; ai <= 9; ++ai) {
      worst = std::max(worst, reflection_conjugation_residual(n, ai / 10.0));
    }
  }
  CheckLine line;
  line.criterion = 0;
  line.label = "reflection-conjugation";
  line.pass = worst <= 1e-12;
  line.detail = "flip conjugation of the base stretch matches the rotation " +
                std::string("conjugation form within ") + fd(worst) +
                " (<=1e-12) over n=3..12, alpha=0.1..0.9";
  return line;
}

std::string render_body(const std::vector<CheckLine>& lines) {
  std::string body;
  for (const CheckLine& line : lines) body += render_check_line(line) + "\n";
  return body;
}

std::vector<CheckLine> run_numbered(std::uint64_t seed) {
  std::vector<CheckLine> lines;
  lines.reserve(9);
  for (int criterion = 1; criterion <= 9; ++criterion) {
    lines.push_back(run_criterion(criterion, seed));
  }
  return lines;
}

}  // namespace

std::string render_check_line(const CheckLine& line) {
  std::string out;
  if (line.criterion > 0) {
    out = "criterion " + std::to_string(line.criterion);
  } else {
    out = "check " + line.label;
  }
  out += line.pass ? ": PASS - " : ": FAIL - ";
  out += line.detail;
  return out;
}

CheckLine run_criterion(int criterion, std::uint64_t seed) {
  switch (criterion) {
    case 1: return criterion_anisotropy(seed);
    case 2: return criterion_single_layer(seed);
    case 3: return criterion_noniterability(seed);
    case 4: return criterion_symmetries(seed);
    case 5: return criterion_convergence(seed);
    case 6: return criterion_linearized(seed);
    case 7: return criterion_quartic(seed);
    case 8: return criterion_scan3d(seed);
    case 9: return criterion_energy(seed);
    case 10: {
      const std::string first = render_body(run_numbered(seed));
      const std::string second = render_body(run_numbered(seed));
      CheckLine line;
      line.criterion = 10;
      line.pass = first == second;
      line.detail = line.pass
                        ? "re-rendered report body is byte-identical"
                        : "re-rendered report body differs between two runs";
      return line;
    }
    default:
      throw std::invalid_argument("criterion must lie in 1..10");
  }
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed) {
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;

  if (suite == "all") {
    report.lines = run_numbered(seed);
    const std::string body = render_body(report.lines);
    const std::string again = render_body(run_numbered(seed));
    CheckLine determinism;
    determinism.criterion = 10;
    determinism.pass = body == again;
    determinism.detail = determinism.pass
                             ? "re-rendered report body is byte-identical"
                             : "re-rendered report body differs between two runs";
    report.lines.push_back(determinism);
  } else if (suite == "appendix") {
    report.lines.push_back(check_reflection_conjugation());
    report.lines.push_back(run_criterion(7, seed));
  } else {
    throw std::invalid_argument("unknown suite (expected \"all\" or \"appendix\")");
  }

  int passing = 0;
  for (const CheckLine& line : report.lines) {
    if (line.pass) ++passing;
  }
  report.all_pass = passing == static_cast<int>(report.lines.size());

  std::string text;
  text += "tool: ";
  text += kToolName;
  text += " ";
  text += kVersion;
  text += "\nsuite: " + suite;
  text += "\nseed: " + std::to_string(seed) + "\n";
  text += render_body(report.lines);
  text += "summary: ";
  text += report.all_pass ? "PASS" : "FAIL";
  text += " (" + std::to_string(passing) + " of " +
          std::to_string(report.lines.size()) + " checks pass)\n";
  report.text = text;
  return report;
}

}  // namespace ngonstar
