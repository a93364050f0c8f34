#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladderlab/asymptotics.hpp"
#include "ladderlab/checkpoint_io.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/execution.hpp"
#include "ladderlab/series.hpp"
#include "ladderlab/sieve.hpp"
#include "ladderlab/verify.hpp"
#include "ladderlab/zeta.hpp"

namespace fs = std::filesystem;
using namespace ladderlab;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kUsage = 2, kIo = 3 };

struct Options {
  RunConfig cfg;
  fs::path output;
  // zeros
  double zeros_from = 0.0;
  double zeros_to = 0.0;
  // ladder-gap
  std::vector<fs::path> gap_files;
  // verify
  std::string suite = "all";
  // coeffs
  int order = 5;
  // pi-compare
  std::vector<double> prime_T = {1e3, 3e3, 1e4};
  // tangent
  double tangent_T = 1e4;
  double tangent_U = 0.0;
  // plot-scripts
  fs::path report;
};

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open " + p.string() + " for writing");
  return out;
}

void close_out(std::ofstream& out, const fs::path& p) {
  out.close();
  if (!out) throw IoError("write failed for " + p.string());
}

fs::path output_or(const Options& o, const std::string& name) {
  return o.output.empty() ? o.cfg.out_dir / name : o.output;
}

std::string slug(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') c = '_';
  return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------ commands

int cmd_checkpoints(const Options& o) {
  const RunConfig& cfg = o.cfg;
  const fs::path path = o.output.empty() ? cfg.checkpoint_path() : o.output;
  CumulativeTable table;
  if (cfg.t_max > 0.0) {
    std::cerr << "building checkpoints to t = " << cfg.t_max << "\n";
    table = build_checkpoints(cfg.t_max, cfg.max_step, cfg.rel_tol);
    save_checkpoints(table, path);
  } else {
    RunConfig c = cfg;
    c.checkpoint = path;
    Workspace ws(c, std::cerr);
    table = ws.table();
  }
  if (cfg.json) {
    print_json({{"path", path.string()}, {"t_max", table.t_max()}, {"knots", table.t().size()},
                {"I_t_max", table.I().back()}, {"A", table.A()}});
  } else {
    std::cout << path.string() << ": " << table.t().size() << " knots to t = " << format_real(table.t_max())
              << ", I = " << format_real(table.I().back()) << "\n";
  }
  return kOk;
}

int cmd_zeros(const Options& o) {
  const double hi = o.zeros_to > 0.0 ? o.zeros_to : o.cfg.zeros_T_max;
  if (!(hi > o.zeros_from) || o.zeros_from < 0.0) throw PreconditionError("zeros: need 0 <= from < to");
  const std::vector<ZeroRecord> zs = find_zeros(o.zeros_from, hi);
  const fs::path path = output_or(o, "zeros.csv");
  std::ofstream out = open_out(path);
  out << "index,gamma,bracket_width,z_residual\n";
  std::size_t tangential = 0;
  for (const ZeroRecord& z : zs) {
    if (z.tangential) {
      ++tangential;
      continue;
    }
    out << z.index << ',' << format_real(z.gamma) << ',' << format_real(z.bracket_width) << ','
        << format_real(z.z_residual) << '\n';
  }
  close_out(out, path);
  if (tangential) std::cerr << "warning: " << tangential << " near-tangential minima not listed\n";
  const std::size_t n = zs.size() - tangential;
  if (o.cfg.json)
    print_json({{"path", path.string()}, {"from", o.zeros_from}, {"to", hi}, {"zeros", n}, {"flagged", tangential}});
  else
    std::cout << path.string() << ": " << n << " zeros in [" << o.zeros_from << ", " << hi << "]\n";
  return kOk;
}

int cmd_ladder(const Options& o) {
  Workspace ws(o.cfg, std::cerr);
  const LadderTable& L = ws.ladder();
  const fs::path path = output_or(o, "ladder-" + slug(L.mu.name()) + ".csv");
  std::ofstream out = open_out(path);
  out << "T,phi,residual\n";
  std::size_t bad = 0;
  const LadderSolver& S = ws.solver(L.mu);
  for (const LadderPoint& p : L.points) {
    out << format_real(p.T) << ',' << format_real(p.phi) << ',' << format_real(p.residual) << '\n';
    if (std::abs(p.residual) > o.cfg.tol_eq * std::max(1.0, S.Phi(p.phi))) ++bad;
  }
  close_out(out, path);
  if (!L.omitted.empty())
    std::cerr << "warning: " << L.omitted.size() << " grid points below T0 = " << format_real(L.T0) << " omitted\n";
  if (o.cfg.json)
    print_json({{"path", path.string()}, {"mu", L.mu.name()}, {"T0", L.T0}, {"rows", L.points.size()},
                {"omitted", L.omitted}, {"residual_violations", bad}});
  else
    std::cout << path.string() << ": " << L.points.size() << " rows, mu = " << L.mu.name() << ", T0 = "
              << format_real(L.T0) << "\n";
  if (bad) {
    std::cerr << bad << " rows exceed tol_eq\n";
    return kAssertion;
  }
  return kOk;
}

std::map<double, double> read_ladder_csv(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot read " + p.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("T,phi", 0) != 0) throw IoError(p.string() + ": not a ladder CSV");
  std::map<double, double> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) throw IoError(p.string() + ": malformed row");
    try {
      rows[parse_real(a)] = parse_real(b);
    } catch (const std::exception&) {
      throw IoError(p.string() + ": malformed number in '" + line + "'");
    }
  }
  return rows;
}

int cmd_ladder_gap(const Options& o) {
  Json j;
  std::vector<double> T, scaled;
  if (!o.gap_files.empty()) {
    if (o.gap_files.size() != 2) throw PreconditionError("ladder-gap takes two ladder CSV files");
    const auto a = read_ladder_csv(o.gap_files[0]);
    const auto b = read_ladder_csv(o.gap_files[1]);
    std::vector<double> diff;
    for (const auto& [t, phi] : a) {
      const auto it = b.find(t);
      if (it == b.end()) continue;
      T.push_back(t);
      diff.push_back(phi - it->second);
      scaled.push_back(std::abs(diff.back()) * t);
    }
    if (T.empty()) throw PreconditionError("ladder-gap: the files share no T values");
    j["files"] = {o.gap_files[0].string(), o.gap_files[1].string()};
    j["T"] = T;
    j["direct_difference"] = diff;
  } else {
    Workspace ws(o.cfg, std::cerr);
    const LadderSolver& s1 = ws.solver(o.cfg.mu_K(o.cfg.K));
    const LadderSolver& s2 = ws.solver(o.cfg.mu_K(o.cfg.K2));
    std::vector<double> direct, gap;
    for (double t : geometric_grid(std::max(o.cfg.T_lo, std::max(s1.T0(), s2.T0())), o.cfg.T_hi, 4)) {
      const GapResult g = ladder_gap(s1, s2, t);
      T.push_back(t);
      direct.push_back(g.direct);
      gap.push_back(g.gap);
      scaled.push_back(std::abs(g.gap) * t);
    }
    j["mu1"] = s1.mu().name();
    j["mu2"] = s2.mu().name();
    j["T"] = T;
    j["direct_difference"] = direct;
    j["gap"] = gap;
  }
  double m = 0.0;
  for (double s : scaled) m = std::max(m, s);
  const bool bounded = no_growth(scaled);
  j["abs_gap_times_T"] = scaled;
  j["max_abs_gap_times_T"] = m;
  j["bounded"] = bounded;
  if (o.cfg.json) {
    print_json(j);
  } else {
    for (std::size_t i = 0; i < T.size(); ++i)
      std::cout << "T = " << format_real(T[i]) << "  |dphi| T = " << format_real(scaled[i]) << "\n";
    std::cout << "max |dphi| T = " << format_real(m) << (bounded ? "  bounded\n" : "  GROWING\n");
  }
  return bounded ? kOk : kAssertion;
}

int cmd_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw PreconditionError("unknown suite '" + o.suite + "'");
  Workspace ws(o.cfg, std::cerr);
  const Json report = run_suite(ws, *suite);
  const fs::path path = output_or(o, "report-" + o.suite + ".json");
  std::ofstream out = open_out(path);
  out << report.dump(2) << "\n";
  close_out(out, path);
  if (o.cfg.json) {
    print_json(report);
  } else {
    for (const auto& [name, section] : report.items()) {
      if (!section.is_object() || !section.contains("pass")) continue;
      std::cout << (section["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "\n";
      if (section.contains("checks"))
        for (const auto& [check, ok] : section["checks"].items())
          if (!ok.get<bool>()) std::cout << "       failed: " << check << "\n";
    }
    std::cout << "report: " << path.string() << "\n";
  }
  return report["pass"].get<bool>() ? kOk : kAssertion;
}

int cmd_coeffs(const Options& o) {
  if (o.order < 1 || o.order > 12) throw PreconditionError("coeffs: --n must be in [1, 12]");
  const CoefficientSeries A = expansion_A(o.order);
  const CoefficientSeries B = expansion_B(o.order);
  const Constants k = make_constants();
  Json j = Json::array();
  for (int i = 1; i <= o.order; ++i)
    j.push_back({{"k", i}, {"A", A[i].to_string()}, {"B", B[i].to_string()},
                 {"A_value", A[i].evaluate(k.q())}, {"B_value", B[i].evaluate(k.q(), k.a)}});
  if (o.cfg.json) {
    print_json(j);
  } else {
    std::cout << "q = 1 - c, a = ln(2 pi) - 1 - c\n";
    for (const auto& row : j)
      std::cout << "A" << row["k"].get<int>() << " = " << row["A"].get<std::string>() << "\n";
    for (const auto& row : j)
      std::cout << "B" << row["k"].get<int>() << " = " << row["B"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_pi_compare(const Options& o) {
  Workspace ws(o.cfg, std::cerr);
  const LadderSolver& S = ws.solver(o.cfg.mu());
  const Constants k = make_constants();
  Json rows = Json::array();
  for (double T : o.prime_T) {
    const double phi = S.phi(T);
    const double exact = static_cast<double>(sieve_pi(T));
    const double approx = pi_approx(T, phi, k);
    rows.push_back({{"T", T}, {"phi", phi}, {"sieve_pi", exact}, {"pi_approx", approx},
                    {"relative_error", std::abs(approx - exact) / exact}, {"T_over_lnT_minus_a", T / (std::log(T) - k.a)}});
  }
  if (o.cfg.json) {
    print_json(rows);
  } else {
    std::cout << "T,phi,sieve_pi,pi_approx,relative_error\n";
    for (const auto& r : rows)
      std::cout << format_real(r["T"]) << ',' << format_real(r["phi"]) << ',' << format_real(r["sieve_pi"]) << ','
                << format_real(r["pi_approx"]) << ',' << format_real(r["relative_error"]) << '\n';
  }
  return kOk;
}

int cmd_tangent(const Options& o) {
  RunConfig cfg = o.cfg;
  cfg.tangent_T = o.tangent_T;
  Workspace ws(cfg, std::cerr);
  const Constants k = make_constants();
  const double U = o.tangent_U > 0.0 ? o.tangent_U : std::cbrt(o.tangent_T);
  const TangentLaw tl = tangent_law(o.tangent_T, U, ws.solver(cfg.mu()), k);
  const Json j = {{"T", o.tangent_T}, {"U", U}, {"lhs", tl.lhs}, {"slope", tl.slope}, {"main_term", tl.main_term},
                  {"residual", tl.residual}, {"residual_over_main", tl.residual / tl.main_term}};
  if (o.cfg.json) {
    print_json(j);
  } else {
    for (const auto& [key, v] : j.items()) std::cout << key << " = " << format_real(v.get<double>()) << "\n";
  }
  return kOk;
}

int cmd_section(const Options& o, const char* name, Json (*fn)(Workspace&)) {
  Workspace ws(o.cfg, std::cerr);
  const Json j = fn(ws);
  const fs::path path = output_or(o, std::string(name) + ".json");
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
  close_out(out, path);
  if (o.cfg.json) {
    print_json(j);
  } else if (std::string(name) == "c0-fit") {
    std::cout << "c0 = " << format_real(j["value"]) << " +- " << format_real(j["uncertainty"]) << "  (" << j["mu"].get<std::string>()
              << ")\n";
    std::cout << "with " << j["second_mu"]["mu"].get<std::string>() << ": " << format_real(j["second_mu"]["value"]) << " +- "
              << format_real(j["second_mu"]["uncertainty"]) << "\n";
  } else {
    const auto& T = j["T_grid"];
    for (std::size_t i = 0; i < T.size(); ++i)
      std::cout << "T = " << format_real(T[i]) << "  spread = " << format_real(j["spread"][i]) << "  spread*T = "
                << format_real(j["spread_times_T"][i]) << "\n";
  }
  std::cout << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "  (" << path.string() << ")\n";
  return j["pass"].get<bool>() ? kOk : kAssertion;
}

// ------------------------------------------------------------ plot scripts

const Json& require(const Json& j, const char* key, const fs::path& src) {
  if (!j.contains(key)) throw IoError(src.string() + ": report has no '" + key + "' section");
  return j[key];
}

void write_dat(const fs::path& p, const std::string& header, const std::vector<std::vector<double>>& cols) {
  std::ofstream out = open_out(p);
  out << "# " << header << "\n";
  const std::size_t n = cols.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? " " : "") << format_real(cols[c][i]);
    out << "\n";
  }
  close_out(out, p);
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out = open_out(p);
  out << text;
  close_out(out, p);
}

std::vector<double> vec(const Json& j) { return j.get<std::vector<double>>(); }

int cmd_plot_scripts(const Options& o) {
  const fs::path src = o.report.empty() ? o.cfg.out_dir / "report-all.json" : o.report;
  std::ifstream in(src);
  if (!in) throw IoError("no report at " + src.string() + " (run `verify all` first)");
  Json r;
  try {
    r = Json::parse(in);
  } catch (const std::exception& e) {
    throw IoError(src.string() + ": " + e.what());
  }
  const fs::path dir = o.output.empty() ? o.cfg.out_dir / "plots" : o.output;
  std::vector<std::string> written;

  const Json& lad = require(r, "ladder", src);
  {
    const auto T = vec(lad["T"]), phi = vec(lad["phi"]);
    std::vector<double> lo, hi;
    for (double t : T) {
      lo.push_back(1.9 * t);
      hi.push_back(2.0 * t);
    }
    write_dat(dir / "envelope.dat", "T 1.9T 2T phi", {T, lo, hi, phi});
    write_text(dir / "envelope.gp",
               "set terminal pngcairo size 900,600\nset output 'envelope.png'\nset xlabel 'T'\nset ylabel 'y'\n"
               "set key left top\nplot 'envelope.dat' u 1:2 w l t '1.9T', '' u 1:3 w l t '2T', '' u 1:4 w lp pt 7 ps 0.5 t 'phi(T)'\n");
    written.push_back("envelope");
  }
  {
    const Json& a = require(r, "theorem_A", src);
    const auto T = vec(a["grid_T"]), rF = vec(a["I_minus_F"]);
    std::vector<double> absr, fit;
    double C = 0.0;
    for (std::size_t i = 0; i < T.size(); ++i) C = std::max(C, std::abs(rF[i]) * T[i] / std::log(T[i]));
    for (std::size_t i = 0; i < T.size(); ++i) {
      absr.push_back(std::abs(rF[i]));
      fit.push_back(C * std::log(T[i]) / T[i]);
    }
    write_dat(dir / "remainder.dat", "T |I-F(phi)| C*lnT/T (C = " + format_real(C) + ")", {T, absr, fit});
    write_text(dir / "remainder.gp",
               "set terminal pngcairo size 900,600\nset output 'remainder.png'\nset logscale xy\nset xlabel 'T'\n"
               "set ylabel '|r(T)|'\nplot 'remainder.dat' u 1:2 w lp pt 7 ps 0.5 t '|I - F(phi)|', '' u 1:3 w l t 'C ln T / T'\n");
    written.push_back("remainder");
  }
  {
    const Json& b = require(r, "beam", src);
    write_dat(dir / "beam.dat", "T spread spread*T", {vec(b["T_grid"]), vec(b["spread"]), vec(b["spread_times_T"])});
    write_dat(dir / "beam_input.dat", "y divergence_printed", {vec(b["y_grid"]), vec(b["divergence_printed"])});
    write_text(dir / "beam.gp",
               "set terminal pngcairo size 900,600\nset output 'beam.png'\nset multiplot layout 1,2\nset logscale y\n"
               "set xlabel 'y'\nplot 'beam_input.dat' u 1:2 w lp t 'input divergence'\nset xlabel 'T'\n"
               "plot 'beam.dat' u 1:(abs($2)+1e-300) w lp t 'output spread', '' u 1:(abs($3)+1e-300) w lp t 'spread * T'\n"
               "unset multiplot\n");
    written.push_back("beam");
  }
  {
    const Json& p = require(r, "primes", src);
    write_dat(dir / "primes.dat", "T sieve_pi pi_approx T/(lnT-a)",
              {vec(p["T"]), vec(p["sieve_pi"]), vec(p["pi_approx"]), vec(p["T_over_lnT_minus_a"])});
    write_text(dir / "primes.gp",
               "set terminal pngcairo size 900,600\nset output 'primes.png'\nset logscale x\nset xlabel 'T'\nset key left top\n"
               "plot 'primes.dat' u 1:2 w lp t 'pi(T)', '' u 1:3 w lp t 'pi_approx', '' u 1:4 w lp t 'T/(ln T - a)'\n");
    written.push_back("primes");
  }
  if (o.cfg.json) {
    print_json({{"dir", dir.string()}, {"plots", written}});
  } else {
    for (const auto& w : written) std::cout << (dir / (w + ".gp")).string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Mean-square zeta ladders: checkpoints, ladders and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "Flat key=value file; keys are the long flag names");

  Options o;
  RunConfig& c = o.cfg;
  std::string out_dir = c.out_dir.string(), checkpoint;
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_flag("--json", c.json, "Print JSON instead of text");
  app.add_option("-o,--output", o.output, "Output file (or directory for plot-scripts)");
  app.add_option("--checkpoint", checkpoint, "Checkpoint CSV (default: <out>/checkpoints.csv)");
  app.add_option("--t-max", c.t_max, "Checkpoint range; 0 derives it from the grids")->capture_default_str();
  app.add_option("--max-step", c.max_step, "Largest knot step")->capture_default_str();
  app.add_option("--rel-tol", c.rel_tol, "Relative quadrature tolerance")->capture_default_str();
  app.add_option("--abs-tol", c.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
  app.add_option("--tol-eq", c.tol_eq, "Defining-equation tolerance, relative to max(1, Phi)")->capture_default_str();
  app.add_option("--tol-inv", c.tol_inv, "Round-trip tolerance, relative to y")->capture_default_str();
  app.add_option("--y0", c.y0, "Start of the weight family")->capture_default_str();
  app.add_option("--K", c.K, "mu(y) = K y ln y")->capture_default_str();
  app.add_option("--K2", c.K2, "Second K for consistency checks")->capture_default_str();
  app.add_option("--mu-family", c.mu_family, "k_log or beam")->capture_default_str();
  app.add_option("--rho", c.rho, "Beam parameter rho")->capture_default_str();
  app.add_option("--n", c.n, "Beam exponent n")->capture_default_str();
  app.add_option("--T-lo", c.T_lo)->capture_default_str();
  app.add_option("--T-hi", c.T_hi)->capture_default_str();
  app.add_option("--T-count", c.T_count)->capture_default_str();
  app.add_option("--T-spacing", c.T_spacing, "linear or geometric")->capture_default_str();
  app.add_option("--y-lo", c.y_lo)->capture_default_str();
  app.add_option("--y-hi", c.y_hi)->capture_default_str();
  app.add_option("--y-count", c.y_count)->capture_default_str();
  app.add_option("--beam-rho", c.beam_rho, "Comma-separated rho values")->delimiter(',')->capture_default_str();
  app.add_option("--zeros-T-max", c.zeros_T_max)->capture_default_str();
  app.add_option("--tangent-T", c.tangent_T)->capture_default_str();

  auto* chk = app.add_subcommand("checkpoints", "Build and save the cumulative integral table");
  auto* zer = app.add_subcommand("zeros", "List zeros of Z as CSV");
  zer->add_option("--from", o.zeros_from, "Lower end")->capture_default_str();
  zer->add_option("--to", o.zeros_to, "Upper end (default zeros-T-max)");
  auto* lad = app.add_subcommand("ladder", "Solve the ladder on the T grid and write T,phi,residual");
  auto* gap = app.add_subcommand("ladder-gap", "Compare two ladders (two CSV files, or K against K2)");
  gap->add_option("files", o.gap_files, "Two ladder CSV files");
  auto* ver = app.add_subcommand("verify", "Run a verification suite and write its report");
  ver->add_option("suite", o.suite, "theorem-a, theorem-b, theorem-c, series, primes, tangent, tka, beam or all")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  auto* coe = app.add_subcommand("coeffs", "Print the exact expansion coefficients");
  coe->add_option("--n,--order", o.order, "Number of coefficients")->capture_default_str();
  auto* pic = app.add_subcommand("pi-compare", "Compare pi_approx with sieve counts");
  pic->add_option("--at", o.prime_T, "T values")->delimiter(',')->capture_default_str();
  auto* tan = app.add_subcommand("tangent", "Tangent law at one T");
  tan->add_option("--T", o.tangent_T, "Left end")->capture_default_str();
  tan->add_option("--U", o.tangent_U, "Interval length (default T^(1/3))");
  auto* bea = app.add_subcommand("beam", "Beam experiment over beam-rho");
  auto* c0f = app.add_subcommand("c0-fit", "Fit c0 from the ladder");
  auto* plt = app.add_subcommand("plot-scripts", "Emit gnuplot scripts and data files from a report");
  plt->add_option("--report", o.report, "Report JSON (default <out>/report-all.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  c.out_dir = out_dir;
  c.checkpoint = checkpoint;

  try {
    c.validate();
    if (chk->parsed()) return cmd_checkpoints(o);
    if (zer->parsed()) return cmd_zeros(o);
    if (lad->parsed()) return cmd_ladder(o);
    if (gap->parsed()) return cmd_ladder_gap(o);
    if (ver->parsed()) return cmd_verify(o);
    if (coe->parsed()) return cmd_coeffs(o);
    if (pic->parsed()) return cmd_pi_compare(o);
    if (tan->parsed()) return cmd_tangent(o);
    if (bea->parsed()) return cmd_section(o, "beam", section_beam);
    if (c0f->parsed()) return cmd_section(o, "c0-fit", section_c0_fit);
    if (plt->parsed()) return cmd_plot_scripts(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  }
  return kUsage;
}
