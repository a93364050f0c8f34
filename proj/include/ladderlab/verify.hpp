#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladderlab/asymptotics.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {

using Json = nlohmann::ordered_json;

struct RunConfig {
  double t_max = 0.0;  // 0: derived from the grids
  double max_step = kDefaultMaxStep;
  double rel_tol = kDefaultRelTol;
  double abs_tol = kDefaultAbsTol;
  double tol_eq = 1e-8;   // relative to max(1, Phi)
  double tol_inv = 1e-9;  // relative to y
  double y0 = 100.0;
  double K = 7.0;
  double K2 = 9.0;
  std::string mu_family = "k_log";  // or "beam"
  double rho = 0.0;
  int n = 1;
  double T_lo = 500.0;
  double T_hi = 1e4;
  int T_count = 40;
  std::string T_spacing = "linear";  // or "geometric"
  double y_lo = 200.0;
  double y_hi = 2e4;
  int y_count = 40;
  std::vector<double> beam_rho = {0.0, 0.5, 1.0};
  double zeros_T_max = 5000.0;
  double tangent_T = 1e4;
  std::filesystem::path out_dir = "ladderlab-out";
  std::filesystem::path checkpoint;  // default: out_dir / checkpoints.csv
  bool json = false;

  // Throws PreconditionError on an inconsistent configuration.
  void validate() const;
  std::filesystem::path checkpoint_path() const;
  std::vector<double> T_grid() const;
  std::vector<double> y_grid() const;
  MuSpec mu() const;
  MuSpec mu_K(double K) const;
  Json to_json() const;
};

// Max over the second half of the sequence is at most `factor` times the
// max over the first half: the "bounded, no growth" test used throughout.
bool no_growth(std::span<const double> values, double factor = 2.0);

// Lazily builds or loads everything the suites share.
class Workspace {
 public:
  Workspace(RunConfig config, std::ostream& log);
  ~Workspace();

  const RunConfig& config() const { return config_; }
  std::ostream& log() { return log_; }
  // t_max the configured grids need (uses a calibration table up to 1e5).
  double needed_t_max();
  const CumulativeTable& table();
  const LadderSolver& solver(const MuSpec& mu);
  const LadderTable& ladder();  // configured mu on the T grid
  const LadderTable& ladder_K(double K);
  Constants constants();  // with c0 once fitted
  C0Fit c0();

 private:
  RunConfig config_;
  std::ostream& log_;
  std::unique_ptr<CumulativeTable> table_;
  std::map<std::string, std::unique_ptr<LadderSolver>> solvers_;
  std::map<std::string, std::unique_ptr<LadderTable>> ladders_;
  std::optional<C0Fit> c0_;
};

enum class Suite { theorem_a, theorem_b, theorem_c, series, primes, tangent, tka, beam, all };

std::optional<Suite> parse_suite(const std::string& name);
std::vector<std::string> suite_names();

// Report sections. Each carries inputs, outputs, fitted constants, pass flags
// and tolerances; `pass` is the conjunction of the section's checks.
Json section_constants(Workspace& ws);
Json section_c0_fit(Workspace& ws);
Json section_ladder(Workspace& ws);
Json section_theorem_A(Workspace& ws);
Json section_theorem_B(Workspace& ws);
Json section_theorem_C(Workspace& ws);
Json section_series();
Json section_primes(Workspace& ws);
Json section_tangent_law(Workspace& ws);
Json section_tka(Workspace& ws);
Json section_beam(Workspace& ws);

// Runs a suite, returns the report ({"config", sections..., "pass"}).
Json run_suite(Workspace& ws, Suite suite);

}  // namespace ladderlab
