#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metrocross/io.hpp"
#include "metrocross/parallel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitOptimizer = 3;
constexpr int kExitNoCrossover = 4;

using metrocross::RunConfig;

std::vector<metrocross::StrategyKind> parse_strategies(const std::string& csv) {
  std::vector<metrocross::StrategyKind> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(metrocross::strategy_kind_from_name(item));
  if (out.empty()) throw metrocross::ParamOutOfRange("empty strategy list");
  return out;
}

// Optional JSON config mirroring RunConfig; command-line flags override.
void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw metrocross::ParamOutOfRange("cannot read config file: " + path);
  nlohmann::json j;
  is >> j;
  if (j.contains("channel")) cfg.channel = metrocross::channel_kind_from_name(j["channel"]);
  if (j.contains("symbol") && j["symbol"] == "t") cfg.symbol = metrocross::DepolSymbol::T;
  if (j.contains("n")) cfg.n_uses = j["n"];
  if (j.contains("strategies")) {
    cfg.strategies.clear();
    for (const auto& s : j["strategies"])
      cfg.strategies.push_back(metrocross::strategy_kind_from_name(s));
  }
  if (j.contains("grid")) {
    if (j["grid"].is_string()) {
      cfg.grid = metrocross::parse_grid(j["grid"]);
    } else {
      cfg.grid.lo = j["grid"].value("lo", cfg.grid.lo);
      cfg.grid.hi = j["grid"].value("hi", cfg.grid.hi);
      cfg.grid.step = j["grid"].value("step", cfg.grid.step);
    }
  }
  if (j.contains("tol")) cfg.tol = j["tol"];
  if (j.contains("seed")) cfg.optimizer.seed = j["seed"];
  if (j.contains("starts")) cfg.optimizer.n_starts = j["starts"];
  if (j.contains("out")) cfg.output_path = j["out"];
  if (j.contains("format")) cfg.format = metrocross::output_format_from_name(j["format"]);
}

void write_output(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw metrocross::Error("cannot open output file: " + path);
  os << contents;
}

struct CommonFlags {
  std::string config_path;
  std::string channel = "depolarizing";
  std::string symbol = "eta";
  int n_uses = 4;
  std::string strategies = "parallel,ancilla";
  std::string grid = "0:1:0.02";
  double tol = 0.005;
  std::uint64_t seed = 42;
  int starts = 32;
  std::string out;
  std::string format = "csv";
  bool serial = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file (flags override its values)");
  cmd->add_option("--channel", f.channel, "pauli-xy | depolarizing | amplitude-damping");
  cmd->add_option("--symbol", f.symbol, "depolarizing parameter symbol for output labels (eta|t)");
  cmd->add_option("--n", f.n_uses, "total channel uses N");
  cmd->add_option("--strategies", f.strategies, "comma list: parallel,ancilla,intermediate,classical");
  cmd->add_option("--grid", f.grid, "noise parameter grid lo:hi:step");
  cmd->add_option("--tol", f.tol, "crossover bracket tolerance");
  cmd->add_option("--seed", f.seed, "optimizer seed (all randomness flows from it)");
  cmd->add_option("--starts", f.starts, "optimizer multi-start count");
  cmd->add_option("--out", f.out, "output file (stdout when omitted)");
  cmd->add_option("--format", f.format, "csv | json");
  cmd->add_flag("--serial", f.serial, "run single-threaded (reference execution path)");
}

RunConfig build_config(const CLI::App* cmd, const CommonFlags& f) {
  RunConfig cfg;
  cfg.strategies = parse_strategies("parallel,ancilla");
  if (!f.config_path.empty()) load_config_file(f.config_path, cfg);
  if (cmd->count("--channel") || f.config_path.empty())
    cfg.channel = metrocross::channel_kind_from_name(f.channel);
  if (cmd->count("--symbol"))
    cfg.symbol = (f.symbol == "t") ? metrocross::DepolSymbol::T : metrocross::DepolSymbol::Eta;
  if (cmd->count("--n") || f.config_path.empty()) cfg.n_uses = f.n_uses;
  if (cmd->count("--strategies") || f.config_path.empty())
    cfg.strategies = parse_strategies(f.strategies);
  if (cmd->count("--grid") || f.config_path.empty()) cfg.grid = metrocross::parse_grid(f.grid);
  if (cmd->count("--tol")) cfg.tol = f.tol;
  if (cmd->count("--seed")) cfg.optimizer.seed = f.seed;
  if (cmd->count("--starts")) cfg.optimizer.n_starts = f.starts;
  if (cmd->count("--out")) cfg.output_path = f.out;
  if (cmd->count("--format")) cfg.format = metrocross::output_format_from_name(f.format);
  if (f.serial) metrocross::set_default_exec_mode(metrocross::ExecMode::Serial);
  return cfg;
}

int cmd_sweep(const CLI::App* cmd, const CommonFlags& f) {
  const RunConfig cfg = build_config(cmd, f);
  const auto rows = metrocross::run_sweep(cfg);
  std::ostringstream os;
  if (cfg.format == metrocross::OutputFormat::Json)
    metrocross::write_sweep_json(rows, os);
  else
    metrocross::write_sweep_csv(rows, os);
  write_output(cfg.output_path, os.str());
  return kExitOk;
}

int cmd_crossover(const CLI::App* cmd, const CommonFlags& f) {
  const RunConfig cfg = build_config(cmd, f);
  if (cfg.strategies.size() != 2)
    throw metrocross::ParamOutOfRange("crossover needs exactly two strategies");
  const std::string report =
      metrocross::crossover_report_json(cfg, cfg.strategies[0], cfg.strategies[1]);
  write_output(cfg.output_path, report);
  if (!cfg.output_path.empty()) std::cout << report;
  return kExitOk;
}

int cmd_surface(const CLI::App* cmd, const CommonFlags& f, int kappa_points, int eta_points) {
  const RunConfig cfg = build_config(cmd, f);
  const auto pts = metrocross::surface(metrocross::linspace(-1.0, 1.0, kappa_points),
                                       metrocross::linspace(0.0, 1.0, eta_points), cfg.optimizer);
  std::ostringstream os;
  metrocross::write_surface_csv(pts, os);
  write_output(cfg.output_path, os.str());
  return kExitOk;
}

int cmd_reproduce(const CLI::App* cmd, const CommonFlags& f, const std::string& figure,
                  const std::string& out_dir, int points) {
  metrocross::OptimizerOptions opt;
  if (cmd->count("--seed")) opt.seed = f.seed;
  if (cmd->count("--starts")) opt.n_starts = f.starts;
  if (f.serial) metrocross::set_default_exec_mode(metrocross::ExecMode::Serial);
  const auto paths = metrocross::run_reproduce(figure, out_dir, opt, points);
  for (const auto& p : paths) std::cout << p << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Fisher information strategy comparison for noisy qubit channels"};
  app.require_subcommand(1);

  CommonFlags sweep_flags, crossover_flags, surface_flags, reproduce_flags;

  CLI::App* sweep = app.add_subcommand("sweep", "QFI of selected strategies over a noise grid");
  add_common_flags(sweep, sweep_flags);

  CLI::App* crossover =
      app.add_subcommand("crossover", "locate the noise level where two strategies exchange rank");
  add_common_flags(crossover, crossover_flags);

  CLI::App* surface_cmd =
      app.add_subcommand("surface", "phase-covariant (kappa, eta_par) strategy-difference grid");
  add_common_flags(surface_cmd, surface_flags);
  int kappa_points = 41, eta_points = 41;
  surface_cmd->add_option("--kappa-points", kappa_points, "grid points along kappa");
  surface_cmd->add_option("--eta-points", eta_points, "grid points along eta_par");

  CLI::App* reproduce = app.add_subcommand("reproduce", "emit the data files behind a figure tag");
  std::string figure;
  std::string out_dir = ".";
  int points = 0;
  reproduce->add_option("figure", figure, "fig2 | fig3 | fig4 | figA1 | figB1")->required();
  reproduce->add_option("--out", out_dir, "output directory");
  reproduce->add_option("--points", points, "override the default grid density");
  reproduce->add_option("--seed", reproduce_flags.seed, "optimizer seed");
  reproduce->add_option("--starts", reproduce_flags.starts, "optimizer multi-start count");
  reproduce->add_flag("--serial", reproduce_flags.serial, "run single-threaded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(sweep, sweep_flags);
    if (crossover->parsed()) return cmd_crossover(crossover, crossover_flags);
    if (surface_cmd->parsed()) return cmd_surface(surface_cmd, surface_flags, kappa_points, eta_points);
    if (reproduce->parsed())
      return cmd_reproduce(reproduce, reproduce_flags, figure, out_dir, points);
  } catch (const metrocross::NoSignChange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoCrossover;
  } catch (const metrocross::OptimizerFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOptimizer;
  } catch (const metrocross::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
