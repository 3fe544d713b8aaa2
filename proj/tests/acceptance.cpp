// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mollow/check.hpp"
#include "mollow/cli.hpp"
#include "mollow/contour.hpp"
#include "mollow/model.hpp"

using namespace mollow;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
  if (!note.empty()) std::cout << "  -- " << note;
  std::cout << "\n";
  if (!pass) ++failures;
}

const PropertyResult* find_property(const CheckReport& rep, const std::string& name) {
  for (const auto& p : rep.properties)
    if (p.name == name) return &p;
  return nullptr;
}

void report_from(const CheckReport& rep, int id, const std::string& crit_name,
                 const std::string& prop_name) {
  const PropertyResult* p = find_property(rep, prop_name);
  if (!p) {
    report(id, crit_name, false, "property " + prop_name + " missing from the check suite");
    return;
  }
  std::ostringstream note;
  note << p->detail;
  if (!p->pass) note << " | worst: " << p->worst_point << " dev=" << p->worst_deviation;
  report(id, crit_name, p->pass, note.str());
}

double fit_slope3(const double (&s)[3], const double (&v)[3]) {
  double lx[3], ly[3], mx = 0, my = 0;
  for (int i = 0; i < 3; ++i) {
    lx[i] = std::log10(s[i]);
    ly[i] = std::log10(v[i]);
    mx += lx[i] / 3.0;
    my += ly[i] / 3.0;
  }
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  return num / den;
}

void criterion7_saturation_scaling() {
  const DensityScale unit(1.0);
  const double s_vals[3] = {1e2, 1e3, 1e4};
  double kerr0[3], par0[3], kerrb[3];
  for (int i = 0; i < 3; ++i) {
    const DriveParams p(1.0, 0.0, rabi_from_saturation(s_vals[i], 1.0, 0.0));
    kerr0[i] = std::abs(chi_residue(Component::KerrZ, p, 0.0, unit));
    par0[i] = std::abs(chi_residue(Component::ParametricZ, p, 0.0, unit));
    kerrb[i] = std::abs(chi_residue(Component::KerrZ, p, p.rabi, unit));
  }
  const double slope_kerr0 = fit_slope3(s_vals, kerr0);
  const double slope_par0 = fit_slope3(s_vals, par0);
  const double slope_kerrb = fit_slope3(s_vals, kerrb);
  const bool ok_kerr0 = std::abs(slope_kerr0 + 1.0) <= 0.05;
  const bool ok_par0 = std::abs(slope_par0 + 1.0) <= 0.05;
  const bool ok_kerrb = std::abs(slope_kerrb + 0.5) <= 0.05;

  std::ostringstream note;
  note.precision(4);
  note << "center slopes: kerr " << slope_kerr0 << " (gate -1 +- 0.05), parametric "
       << slope_par0 << " (gate -1 +- 0.05); sideband kerr " << slope_kerrb
       << " (gate -1/2 +- 0.05)";
  if (!ok_kerr0)
    note << " | the exact Kerr value at the line center is 2i/(gamma (1+s)^2), slope -2,"
            " confirmed by all independent evaluation routes; see README, known red criterion";
  report(7, "saturation scaling at delta=0", ok_kerr0 && ok_par0 && ok_kerrb, note.str());
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return "<missing " + path + ">";
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void criterion12_determinism() {
  bool ok = true;
  std::ostringstream note;

  CheckOptions opt;
  opt.seed = 7;
  opt.triple_points = 10;
  opt.det_points = 10;
  const std::string r1 = report_to_json(run_properties(opt));
  const std::string r2 = report_to_json(run_properties(opt));
  if (r1 != r2) {
    ok = false;
    note << "check report not byte-reproducible; ";
  }

  const std::vector<std::string> args{"sweep",    "--component", "kerr-z", "--delta", "0.25",
                                      "--rabi",   "0",           "--omega-min", "-1",
                                      "--omega-max", "1",        "--points", "5"};
  std::ostringstream out1, out2, err;
  ok &= cli::run(args, out1, err) == 0;
  auto jargs = args;
  jargs.push_back("--format");
  jargs.push_back("json");
  ok &= cli::run(jargs, out2, err) == 0;
  const std::string golden_csv = slurp(std::string(MOLLOW_GOLDEN_DIR) + "/sweep_rabi0.csv");
  const std::string golden_json = slurp(std::string(MOLLOW_GOLDEN_DIR) + "/sweep_rabi0.json");
  if (out1.str() != golden_csv) {
    ok = false;
    note << "CSV golden drifted; ";
  }
  if (out2.str() != golden_json) {
    ok = false;
    note << "JSON golden drifted; ";
  }
  if (ok) note << "check report byte-reproducible; CSV/JSON goldens stable";
  report(12, "determinism and schema stability", ok, note.str());
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  CheckOptions opt;  // seed 1, 200 triple points, 100 determinant points
  const CheckReport rep = run_properties(opt);

  report_from(rep, 1, "triple agreement of the chi evaluators", "triple_agreement");
  report_from(rep, 2, "drift-determinant identity", "determinant_identity");
  report_from(rep, 3, "steady-state algebra", "steady_state");
  report_from(rep, 4, "triplet structure", "triplet_structure");
  report_from(rep, 5, "linear-response reduction", "linear_response");
  report_from(rep, 6, "weak-field anchors", "weak_field_anchor");
  criterion7_saturation_scaling();
  report_from(rep, 8, "parametric shape (optimum near s~1, sideband maxima)", "parametric_shape");
  report_from(rep, 9, "Kerr gain window (negative Im chi)", "kerr_gain_window");
  report_from(rep, 10, "transverse Autler-Townes doublet", "transverse_doublet");
  report_from(rep, 11, "dense-medium renormalization", "renormalization");
  criterion12_determinism();

  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << failures << " criteria failed; total runtime " << dt.count() << " ms\n";
  return failures == 0 ? 0 : 1;
}
