#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metrocross/strategies.hpp"
#include "metrocross/surface.hpp"

namespace metrocross {

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.02;

  void validate() const;                // throws ParamOutOfRange
  std::vector<double> points() const;   // inclusive endpoints
};

GridSpec parse_grid(const std::string& spec);  // "lo:hi:step"

enum class OutputFormat { Csv, Json };
OutputFormat output_format_from_name(const std::string& name);

struct RunConfig {
  ChannelKind channel = ChannelKind::Depolarizing;
  DepolSymbol symbol = DepolSymbol::Eta;
  int n_uses = 4;
  std::vector<StrategyKind> strategies;
  GridSpec grid;
  double tol = 0.005;
  OptimizerOptions optimizer;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
};

// 12 significant digits; round-trips cleanly enough for regression diffs.
std::string format_number(double v);

// "eta", or "t" when the depolarizing channel was parametrized with t.
std::string param_label(const RunConfig& cfg);

struct SweepRow {
  std::string channel;
  std::string param_name;
  double param_value = 0.0;
  std::string strategy;
  int n_uses = 0;
  double block_qfi = 0.0;
  double total_qfi = 0.0;
  std::optional<double> bound_value;
  std::optional<double> classical_ref;
  int starts_converged = 0;
  double spread = 0.0;
  std::uint64_t seed = 0;
};

// Evaluates every (grid point x strategy); rows ordered by grid index,
// then by the strategy order of the config. Optimizer failures carry the
// failing grid point in the exception message.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);
void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& os);

// JSON crossover report (serialized by the CLI); throws NoSignChange /
// OptimizerFailure like the underlying bisection.
std::string crossover_report_json(const RunConfig& cfg, StrategyKind a, StrategyKind b);

void write_surface_csv(const std::vector<SurfacePoint>& points, std::ostream& os);

// Writes the data files behind the named figure tag (fig2, fig3, fig4,
// figA1, figB1) into out_dir; returns the created paths. points_override
// thins the default grids when positive (used by tests).
std::vector<std::string> run_reproduce(const std::string& figure, const std::string& out_dir,
                                       const OptimizerOptions& opt, int points_override = 0);

}  // namespace metrocross
