#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sep3q/sep3q.hpp"

namespace {

using namespace sep3q;
using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// JSON reports carry 10 significant digits; text output 4.
double sig10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

json complex_list_json(const VecX& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({sig10(v(i).real()), sig10(v(i).imag())});
  return out;
}

const char* z_mode_name(ZMode m) {
  return m == ZMode::Complex ? "complex" : "real";
}

const char* op_name(OperatorVariant v) {
  return v == OperatorVariant::Full9 ? "full" : "reduced";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + out_path + " failed");
}

json config_json(const SearchConfig& cfg, double verdict_tol) {
  return {{"seed", cfg.seed},
          {"samples", cfg.samples},
          {"z_mode", z_mode_name(cfg.z_mode)},
          {"operators", op_name(cfg.operator_variant)},
          {"refine", cfg.refine_iters},
          {"rank_tol", cfg.rank_tol},
          {"verdict_tol", verdict_tol},
          {"threads", cfg.threads}};
}

json ppt_json(const PptReport& rep) {
  const char* names[3] = {"A", "B", "C"};
  json out;
  for (int i = 0; i < 3; ++i)
    out[names[i]] = {{"min_eigenvalue", sig10(rep.cuts[i].min_eigenvalue)},
                     {"ppt", rep.cuts[i].ppt}};
  return out;
}

struct CommonOut {
  std::string format = "text";
  std::string out_path;
};

int run_pure(const std::string& file, double tol_sep, const CommonOut& io) {
  const auto t0 = std::chrono::steady_clock::now();
  LoadedState st = read_state_file(file);
  if (!std::holds_alternative<PureState>(st))
    throw ParseError("pure-check requires a state file with kind \"pure\"");
  const PureState& psi = std::get<PureState>(st);

  PureCheck check = is_fully_separable_pure(psi, tol_sep);
  Lemma1Residuals res = lemma1_residuals(psi);
  const bool separable = check.verdict == PureVerdict::Separable;
  const double secs = seconds_since(t0);

  if (io.format == "json") {
    json rep = {{"input", file},
                {"mode", "pure"},
                {"verdict", separable ? "separable" : "entangled"},
                {"certificate", sig10(check.c.norm())},
                {"c_components", complex_list_json(check.c.components)},
                {"lemma1_residuals",
                 {{"slice", {sig10(res.slice[0]), sig10(res.slice[1]), sig10(res.slice[2])}},
                  {"cross", {sig10(res.cross[0]), sig10(res.cross[1]), sig10(res.cross[2])}}}},
                {"seconds", sig10(secs)},
                {"config", {{"tol_sep", tol_sep}}}};
    emit(rep.dump(2) + "\n", io.out_path);
  } else {
    std::ostringstream os;
    os << "input:     " << file << "\n"
       << "mode:      pure\n"
       << "verdict:   " << (separable ? "separable" : "entangled") << "\n"
       << "|C|:       " << fmt4(check.c.norm()) << "\n";
    os << "C:         ";
    for (Eigen::Index i = 0; i < check.c.components.size(); ++i) {
      Complex c = check.c.components(i);
      os << "(" << fmt4(c.real()) << "," << fmt4(c.imag()) << ") ";
    }
    os << "\n";
    os << "residuals: slice " << fmt4(res.slice[0]) << " " << fmt4(res.slice[1])
       << " " << fmt4(res.slice[2]) << "  cross " << fmt4(res.cross[0]) << " "
       << fmt4(res.cross[1]) << " " << fmt4(res.cross[2]) << "\n"
       << "seconds:   " << fmt4(secs) << "\n";
    emit(os.str(), io.out_path);
  }
  return separable ? 0 : 1;
}

int run_mixed(const DensityMatrix& rho, const std::string& descriptor,
              const SearchConfig& cfg, double verdict_tol, bool want_ppt,
              std::optional<double> reference, const CommonOut& io) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult sr = c_mixed(rho, cfg);
  const bool certified = mixed_verdict(sr, verdict_tol) == MixedVerdict::EntangledCertified;
  std::optional<PptReport> ppt;
  if (want_ppt) ppt = ppt_report(rho);
  const double secs = seconds_since(t0);

  if (io.format == "json") {
    json rep = {{"input", descriptor},
                {"mode", "mixed"},
                {"verdict", certified ? "entangled" : "inconclusive"},
                {"certificate", sig10(sr.certificate)},
                {"best_score", sig10(sr.best_score)},
                {"refinement_gain", sig10(sr.refinement_gain)},
                {"samples_evaluated", sr.samples_evaluated},
                {"best_z", complex_list_json(sr.best_z.z)},
                {"seconds", sig10(secs)},
                {"config", config_json(cfg, verdict_tol)}};
    if (reference) rep["reference"] = *reference;
    if (ppt) rep["ppt"] = ppt_json(*ppt);
    emit(rep.dump(2) + "\n", io.out_path);
  } else {
    std::ostringstream os;
    os << "input:       " << descriptor << "\n"
       << "mode:        mixed\n"
       << "verdict:     " << (certified ? "entangled" : "inconclusive") << "\n"
       << "certificate: " << fmt4(sr.certificate) << "\n";
    if (reference) os << "reference:   " << fmt4(*reference) << "\n";
    os << "best_score:  " << fmt4(sr.best_score) << "\n"
       << "refine_gain: " << fmt4(sr.refinement_gain) << "\n"
       << "evaluated:   " << sr.samples_evaluated << " candidates\n";
    if (ppt) {
      const char* names[3] = {"A|BC", "B|AC", "C|AB"};
      for (int i = 0; i < 3; ++i)
        os << "ppt " << names[i] << ":    min eig " << fmt4(ppt->cuts[i].min_eigenvalue)
           << (ppt->cuts[i].ppt ? " (ppt)" : " (npt)") << "\n";
    }
    os << "seconds:     " << fmt4(secs) << "\n"
       << "config:      seed=" << cfg.seed << " samples=" << cfg.samples
       << " z-mode=" << z_mode_name(cfg.z_mode) << " operators=" << op_name(cfg.operator_variant)
       << " refine=" << cfg.refine_iters << "\n";
    emit(os.str(), io.out_path);
  }
  return certified ? 1 : 0;
}

// Demo/gen accept parameters quoted to a few decimals (e.g. 0.3333333) and
// renormalize the trace identity; anything beyond 1e-6 off is a hard error.
DCTParams snap_dct_params(DCTParams p) {
  const double s = p.trace_sum();
  if (std::abs(s - 1.0) > 1e-6)
    throw InvalidParams("dct parameters: a + b + 2(c + d + e) = " +
                        std::to_string(s) + ", must equal 1 within 1e-6");
  p.a /= s;
  p.b /= s;
  p.c /= s;
  p.d /= s;
  p.e /= s;
  return p;
}

std::array<Complex, 2> parse_factor(const std::string& text, const char* name) {
  std::array<double, 4> v{};
  std::istringstream is(text);
  std::string tok;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(is, tok, ','))
      throw InvalidParams(std::string("factor ") + name +
                          ": expected 4 comma-separated reals re0,im0,re1,im1");
    v[i] = std::stod(tok);
  }
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

const double kReferenceShifts = 0.1469;
const double kReferenceDct = 0.3747;

bool near_reference_dct(const DCTParams& p) {
  return std::abs(p.a - 1.0 / 3) < 1e-3 && std::abs(p.b) < 1e-3 &&
         std::abs(p.c - 1.0 / 6) < 1e-3 && std::abs(p.d - 1.0 / 6) < 1e-3 &&
         std::abs(p.e) < 1e-3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit separability and entanglement certification"};
  app.require_subcommand(1);

  SearchConfig cfg;
  double tol_sep = tol::sep_default;
  double verdict_tol = tol::verdict_default;
  bool want_ppt = false;
  CommonOut io;
  std::string file;
  std::string z_mode_str = "complex";
  std::string operators_str = "full";

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", io.format, "Report format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", io.out_path, "Write the report to this path");
  };
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--samples", cfg.samples, "Random z vectors to draw");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--z-mode", z_mode_str, "Sampling sphere: complex|real")
        ->check(CLI::IsMember({"complex", "real"}));
    cmd->add_option("--refine", cfg.refine_iters,
                    "Hill-climb iterations after sampling (0 = sampling only)");
    cmd->add_option("--operators", operators_str, "Operator set: full|reduced")
        ->check(CLI::IsMember({"full", "reduced"}));
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = auto)");
    cmd->add_option("--tol", verdict_tol, "Certificate threshold for the entangled verdict");
    cmd->add_flag("--ppt", want_ppt, "Also run the partial-transpose report");
  };
  auto finish_search_flags = [&] {
    cfg.z_mode = z_mode_str == "real" ? ZMode::RealNonnegative : ZMode::Complex;
    cfg.operator_variant = operators_str == "reduced" ? OperatorVariant::Reduced
                                                      : OperatorVariant::Full9;
  };

  auto* pure_cmd = app.add_subcommand("pure-check",
                                      "Exact separability decision for a pure state file");
  pure_cmd->add_option("file", file, "State file (kind \"pure\")")->required();
  pure_cmd->add_option("--tol", tol_sep, "|C| threshold for the separable verdict");
  add_output_flags(pure_cmd);

  auto* mixed_cmd = app.add_subcommand("mixed-check",
                                       "Entanglement certificate for a density matrix file");
  mixed_cmd->add_option("file", file, "State file (pure files are promoted to projectors)")
      ->required();
  add_search_flags(mixed_cmd);
  add_output_flags(mixed_cmd);

  auto* demo_cmd = app.add_subcommand("demo",
                                      "Reproduce the published bound-entanglement detections");
  std::string which;
  DCTParams dp{1.0 / 3, 0, 1.0 / 6, 1.0 / 6, 0};
  demo_cmd->add_option("which", which, "shifts|dct")
      ->required()
      ->check(CLI::IsMember({"shifts", "dct"}));
  demo_cmd->add_option("--a", dp.a, "dct parameter a");
  demo_cmd->add_option("--b", dp.b, "dct parameter b");
  demo_cmd->add_option("--c", dp.c, "dct parameter c");
  demo_cmd->add_option("--d", dp.d, "dct parameter d");
  demo_cmd->add_option("--e", dp.e, "dct parameter e");
  add_search_flags(demo_cmd);
  add_output_flags(demo_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a library state to a state file");
  std::string gen_name;
  std::uint64_t gen_seed = 1;
  int gen_k = 4;
  std::string fu = "1,0,0,0", fv = "1,0,0,0", ft = "1,0,0,0";
  DCTParams gen_dp{1.0 / 3, 0, 1.0 / 6, 1.0 / 6, 0};
  gen_cmd->add_option("name", gen_name,
                      "ghz|w|product|shifts-complement|dct|random-pure|random-product|"
                      "random-separable|random-density")
      ->required();
  gen_cmd->add_option("--u", fu, "product factor A as re0,im0,re1,im1");
  gen_cmd->add_option("--v", fv, "product factor B");
  gen_cmd->add_option("--t", ft, "product factor C");
  gen_cmd->add_option("--a", gen_dp.a, "dct parameter a");
  gen_cmd->add_option("--b", gen_dp.b, "dct parameter b");
  gen_cmd->add_option("--c", gen_dp.c, "dct parameter c");
  gen_cmd->add_option("--d", gen_dp.d, "dct parameter d");
  gen_cmd->add_option("--e", gen_dp.e, "dct parameter e");
  gen_cmd->add_option("--seed", gen_seed, "Seed for the random-* states");
  gen_cmd->add_option("--k", gen_k, "Mixture size for random-separable");
  gen_cmd->add_option("--out", io.out_path, "Output path (default: stdout)");

  auto* scan_cmd = app.add_subcommand("scan-dct",
                                      "Certificate and PPT flags over a grid of dct states (CSV)");
  double a_min = 0.0, a_max = 1.0, scan_b = 0.0, scan_e = 0.0;
  int steps = 11;
  std::optional<double> scan_c, scan_d;
  scan_cmd->add_option("--a-min", a_min, "Grid start for a");
  scan_cmd->add_option("--a-max", a_max, "Grid end for a");
  scan_cmd->add_option("--steps", steps, "Number of grid points")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--b", scan_b, "Fixed b");
  scan_cmd->add_option("--e", scan_e, "Fixed e");
  scan_cmd->add_option("--c", [&scan_c](const std::vector<std::string>& v) {
    scan_c = std::stod(v[0]);
    return true;
  }, "Fixed c (default: share the remainder with d)");
  scan_cmd->add_option("--d", [&scan_d](const std::vector<std::string>& v) {
    scan_d = std::stod(v[0]);
    return true;
  }, "Fixed d (default: share the remainder with c)");
  scan_cmd->add_option("--samples", cfg.samples, "Random z vectors per point");
  scan_cmd->add_option("--seed", cfg.seed, "RNG seed");
  scan_cmd->add_option("--refine", cfg.refine_iters, "Hill-climb iterations per point");
  scan_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = auto)");
  scan_cmd->add_option("--out", io.out_path, "CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pure_cmd->parsed()) return run_pure(file, tol_sep, io);

    if (mixed_cmd->parsed()) {
      finish_search_flags();
      LoadedState st = read_state_file(file);
      DensityMatrix rho = std::holds_alternative<DensityMatrix>(st)
                              ? std::get<DensityMatrix>(st)
                              : density_from_pure(std::get<PureState>(st));
      return run_mixed(rho, file, cfg, verdict_tol, want_ppt, std::nullopt, io);
    }

    if (demo_cmd->parsed()) {
      finish_search_flags();
      if (which == "shifts")
        return run_mixed(shifts_complement(), "demo shifts", cfg, verdict_tol,
                         want_ppt, kReferenceShifts, io);
      DCTParams p = snap_dct_params(dp);
      std::ostringstream desc;
      desc << "demo dct a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d
           << " e=" << p.e;
      std::optional<double> ref;
      if (near_reference_dct(p)) ref = kReferenceDct;
      return run_mixed(dct_state(p), desc.str(), cfg, verdict_tol, want_ppt, ref, io);
    }

    if (gen_cmd->parsed()) {
      json doc;
      if (gen_name == "ghz") {
        doc = state_to_json(ghz());
      } else if (gen_name == "w") {
        doc = state_to_json(w());
      } else if (gen_name == "product") {
        doc = state_to_json(product(parse_factor(fu, "A"), parse_factor(fv, "B"),
                                    parse_factor(ft, "C")));
      } else if (gen_name == "shifts-complement") {
        doc = state_to_json(shifts_complement());
      } else if (gen_name == "dct") {
        doc = state_to_json(dct_state(snap_dct_params(gen_dp)));
      } else if (gen_name == "random-pure") {
        doc = state_to_json(random_pure(gen_seed));
      } else if (gen_name == "random-product") {
        doc = state_to_json(random_product_pure(gen_seed));
      } else if (gen_name == "random-separable") {
        doc = state_to_json(random_separable_mixed(gen_seed, gen_k));
      } else if (gen_name == "random-density") {
        doc = state_to_json(random_density(gen_seed));
      } else {
        throw UnknownState("unknown state name \"" + gen_name + "\"");
      }
      emit(doc.dump(2) + "\n", io.out_path);
      return 0;
    }

    if (scan_cmd->parsed()) {
      cfg.z_mode = ZMode::Complex;
      std::ostringstream csv;
      csv << "a,b,c,d,e,certificate,ppt_A,ppt_B,ppt_C,seconds\n";
      for (int i = 0; i < steps; ++i) {
        double a = steps == 1 ? a_min : a_min + (a_max - a_min) * i / (steps - 1);
        double rest = 1.0 - a - scan_b - 2 * scan_e;
        DCTParams p{a, scan_b,
                    scan_c ? *scan_c : rest / 4,
                    scan_d ? *scan_d : rest / 4, scan_e};
        if (scan_c && !scan_d) p.d = rest / 2 - p.c;
        if (scan_d && !scan_c) p.c = rest / 2 - p.d;
        if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 || p.e < 0 ||
            std::abs(p.trace_sum() - 1.0) > 1e-6) {
          std::cerr << "warning: skipping invalid grid point a=" << a << "\n";
          continue;
        }
        p = snap_dct_params(p);
        const auto t0 = std::chrono::steady_clock::now();
        DensityMatrix rho = dct_state(p);
        SearchResult sr = c_mixed(rho, cfg);
        PptReport rep = ppt_report(rho);
        char line[256];
        std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%d,%d,%d,%.3f\n",
                      p.a, p.b, p.c, p.d, p.e, sr.certificate, rep.cuts[0].ppt ? 1 : 0,
                      rep.cuts[1].ppt ? 1 : 0, rep.cuts[2].ppt ? 1 : 0, seconds_since(t0));
        csv << line;
      }
      emit(csv.str(), io.out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
