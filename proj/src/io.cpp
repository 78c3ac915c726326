#include "metrocross/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "metrocross/closed_forms.hpp"
#include "metrocross/noise_estimation.hpp"
#include "metrocross/parallel.hpp"

namespace metrocross {

void GridSpec::validate() const {
  if (!(lo < hi)) throw ParamOutOfRange("grid: lo must be < hi");
  if (!(step > 0.0)) throw ParamOutOfRange("grid: step must be positive");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> out;
  const int n = int(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(std::min(lo + i * step, hi));
  if (hi - out.back() > 1e-9 * std::max(1.0, std::abs(hi))) out.push_back(hi);
  return out;
}

GridSpec parse_grid(const std::string& spec) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' || !is.eof())
    throw ParamOutOfRange("grid: expected lo:hi:step, got '" + spec + "'");
  g.validate();
  return g;
}

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParamOutOfRange("unknown output format: " + name);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string param_label(const RunConfig& cfg) {
  if (cfg.channel == ChannelKind::Depolarizing && cfg.symbol == DepolSymbol::T) return "t";
  return "eta";
}

namespace {

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::optional<double> bound_or_none(ChannelKind channel, double eta, int n) {
  if (!(eta > 0.0 && eta < 1.0)) return std::nullopt;  // bounds diverge at the endpoints
  return literature_bound(channel, eta, n);
}

std::optional<double> classical_or_none(ChannelKind channel, double eta, int n) {
  try {
    return classical_reference(channel, eta, n);
  } catch (const UnknownChannelKind&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  if (cfg.strategies.empty()) throw ParamOutOfRange("sweep: no strategies given");
  const std::vector<double> grid = cfg.grid.points();

  // Validate configs up front so config errors surface before any work.
  std::vector<StrategyConfig> configs;
  for (StrategyKind kind : cfg.strategies) configs.push_back(StrategyConfig::make(kind, cfg.n_uses));

  const std::string channel_name = channel_kind_name(cfg.channel);
  const std::string param = param_label(cfg);
  std::vector<std::vector<SweepRow>> per_point(grid.size());

  parallel_for(std::ptrdiff_t(grid.size()), [&](std::ptrdiff_t gi) {
    const double eta = grid[std::size_t(gi)];
    auto& rows = per_point[std::size_t(gi)];
    for (std::size_t si = 0; si < configs.size(); ++si) {
      StrategyEvaluation ev;
      try {
        ev = evaluate(configs[si], cfg.channel, eta, cfg.optimizer);
      } catch (const OptimizerFailure& e) {
        throw OptimizerFailure("sweep: optimizer failed at " + param + "=" + format_number(eta) +
                               " strategy=" + strategy_kind_name(configs[si].kind) + ": " + e.what());
      }
      SweepRow row;
      row.channel = channel_name;
      row.param_name = param;
      row.param_value = eta;
      row.strategy = strategy_kind_name(configs[si].kind);
      row.n_uses = cfg.n_uses;
      row.block_qfi = ev.block_qfi;
      row.total_qfi = ev.total_qfi;
      row.bound_value = bound_or_none(cfg.channel, eta, cfg.n_uses);
      row.classical_ref = classical_or_none(cfg.channel, eta, cfg.n_uses);
      row.starts_converged = ev.report.starts_converged;
      row.spread = ev.report.spread;
      row.seed = cfg.optimizer.seed;
      rows.push_back(std::move(row));
    }
  });

  std::vector<SweepRow> rows;
  for (auto& block : per_point)
    for (auto& row : block) rows.push_back(std::move(row));
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "channel,param_name,param_value,strategy,n_uses,block_qfi,total_qfi,"
        "bound_value,classical_reference,starts_converged,spread,seed\n";
  for (const auto& r : rows) {
    os << r.channel << ',' << r.param_name << ',' << format_number(r.param_value) << ','
       << r.strategy << ',' << r.n_uses << ',' << format_number(r.block_qfi) << ','
       << format_number(r.total_qfi) << ',' << opt_number(r.bound_value) << ','
       << opt_number(r.classical_ref) << ',' << r.starts_converged << ','
       << format_number(r.spread) << ',' << r.seed << '\n';
  }
}

void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& os) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"channel", r.channel},
                     {"param_name", r.param_name},
                     {"param_value", r.param_value},
                     {"strategy", r.strategy},
                     {"n_uses", r.n_uses},
                     {"block_qfi", r.block_qfi},
                     {"total_qfi", r.total_qfi},
                     {"starts_converged", r.starts_converged},
                     {"spread", r.spread},
                     {"seed", r.seed}};
    j["bound_value"] = r.bound_value ? nlohmann::json(*r.bound_value) : nlohmann::json(nullptr);
    j["classical_reference"] =
        r.classical_ref ? nlohmann::json(*r.classical_ref) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

std::string crossover_report_json(const RunConfig& cfg, StrategyKind a, StrategyKind b) {
  const StrategyConfig cfg_a = StrategyConfig::make(a, cfg.n_uses);
  const StrategyConfig cfg_b = StrategyConfig::make(b, cfg.n_uses);
  const CrossoverResult res =
      crossover(cfg_a, cfg_b, cfg.channel, cfg.grid.lo, cfg.grid.hi, cfg.tol, cfg.optimizer);

  nlohmann::json j{
      {"channel", channel_kind_name(cfg.channel)},
      {"param_name", param_label(cfg)},
      {"n_uses", cfg.n_uses},
      {"strategy_a", strategy_kind_name(a)},
      {"strategy_b", strategy_kind_name(b)},
      {"eta_star", res.eta_star},
      {"bracket_lo", res.bracket_lo},
      {"bracket_hi", res.bracket_hi},
      {"bracket_width", res.bracket_hi - res.bracket_lo},
      {"qfi_a", res.qfi_a},
      {"qfi_b", res.qfi_b},
      {"tol", cfg.tol},
      {"seed", cfg.optimizer.seed},
      {"evaluations", res.evaluations},
      {"convention_note",
       "totals are per n_uses channel uses: total = repetitions x block QFI; "
       "ancilla-assisted and classical blocks use the channel once per block"},
  };
  return j.dump(2) + "\n";
}

void write_surface_csv(const std::vector<SurfacePoint>& points, std::ostream& os) {
  os << "kappa,eta_par,eta_perp,qfi_ancilla,qfi_parallel,difference,ok,note\n";
  for (const auto& p : points) {
    os << format_number(p.kappa) << ',' << format_number(p.eta_par) << ','
       << format_number(p.eta_perp) << ',' << format_number(p.qfi_ancilla) << ','
       << format_number(p.qfi_parallel) << ',' << format_number(p.difference) << ','
       << (p.ok ? 1 : 0) << ',' << p.note << '\n';
  }
}

namespace {

struct FigureSpec {
  ChannelKind channel;
  std::string tag;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open output file: " + path);
  os << contents;
}

std::vector<std::string> reproduce_strategy_figure(const FigureSpec& fig, const std::string& dir,
                                                   const OptimizerOptions& opt, int points) {
  RunConfig cfg;
  cfg.channel = fig.channel;
  cfg.n_uses = 4;
  cfg.strategies = {StrategyKind::AncillaAssisted, StrategyKind::Parallel,
                    StrategyKind::Intermediate, StrategyKind::Classical};
  cfg.optimizer = opt;
  const int n = points > 0 ? points : 49;
  cfg.grid.lo = 0.02;
  cfg.grid.hi = 0.98;
  cfg.grid.step = (cfg.grid.hi - cfg.grid.lo) / double(n - 1);

  const std::vector<SweepRow> rows = run_sweep(cfg);
  std::ostringstream panel_a;
  write_sweep_csv(rows, panel_a);

  // panel b: ancilla-assisted total over the other strategies' totals
  std::ostringstream panel_b;
  panel_b << "param_value,ratio_ancilla_parallel,ratio_ancilla_intermediate,"
             "ratio_ancilla_classical\n";
  for (std::size_t i = 0; i + 3 < rows.size(); i += 4) {
    const double anc = rows[i].total_qfi;
    panel_b << format_number(rows[i].param_value) << ',' << format_number(anc / rows[i + 1].total_qfi)
            << ',' << format_number(anc / rows[i + 2].total_qfi) << ','
            << format_number(anc / rows[i + 3].total_qfi) << '\n';
  }

  std::vector<std::string> paths = {dir + "/" + fig.tag + "a.csv", dir + "/" + fig.tag + "b.csv"};
  write_file(paths[0], panel_a.str());
  write_file(paths[1], panel_b.str());

  if (fig.channel == ChannelKind::AmplitudeDamping) {
    // both readings of the published parallel bound (see README note)
    std::ostringstream bounds;
    bounds << "eta,bound_printed,bound_alt\n";
    for (std::size_t i = 0; i < rows.size(); i += 4) {
      const double eta = rows[i].param_value;
      bounds << format_number(eta) << ',' << format_number(4.0 * eta / (1.0 - eta)) << ','
             << format_number(4.0 * (1.0 - eta) / eta) << '\n';
    }
    paths.push_back(dir + "/" + fig.tag + "_bounds.csv");
    write_file(paths.back(), bounds.str());
  }
  return paths;
}

std::vector<std::string> reproduce_surface_figure(const std::string& dir,
                                                  const OptimizerOptions& opt, int points) {
  const int n = points > 0 ? points : 41;
  const auto pts = surface(linspace(-1.0, 1.0, n), linspace(0.0, 1.0, n), opt);
  std::ostringstream os;
  write_surface_csv(pts, os);
  const std::string path = dir + "/figA1.csv";
  write_file(path, os.str());
  return {path};
}

std::vector<std::string> reproduce_estimation_figure(const std::string& dir,
                                                     const OptimizerOptions& opt, int points) {
  const int n = points > 0 ? points : 49;
  const std::vector<double> grid = linspace(0.01, 0.97, n);
  std::vector<double> two_probe(grid.size());
  parallel_for(std::ptrdiff_t(grid.size()), [&](std::ptrdiff_t i) {
    two_probe[std::size_t(i)] = optimal_two_probe_fi(grid[std::size_t(i)], opt).value;
  });

  std::ostringstream os;
  os << "t,j_sequential_1,j_noon_half,j_two_probe_opt,j_two_probe_opt_half,j_ancilla\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    os << format_number(t) << ',' << format_number(sequential_fi(t, 1)) << ','
       << format_number(noon_fi(t) / 2.0) << ',' << format_number(two_probe[i]) << ','
       << format_number(two_probe[i] / 2.0) << ',' << format_number(ancilla_fi(t)) << '\n';
  }
  const std::string path = dir + "/figB1.csv";
  write_file(path, os.str());
  return {path};
}

}  // namespace

std::vector<std::string> run_reproduce(const std::string& figure, const std::string& out_dir,
                                       const OptimizerOptions& opt, int points_override) {
  std::filesystem::create_directories(out_dir);
  if (figure == "fig2")
    return reproduce_strategy_figure({ChannelKind::PauliXY, "fig2"}, out_dir, opt, points_override);
  if (figure == "fig3")
    return reproduce_strategy_figure({ChannelKind::Depolarizing, "fig3"}, out_dir, opt,
                                     points_override);
  if (figure == "fig4")
    return reproduce_strategy_figure({ChannelKind::AmplitudeDamping, "fig4"}, out_dir, opt,
                                     points_override);
  if (figure == "figA1") return reproduce_surface_figure(out_dir, opt, points_override);
  if (figure == "figB1") return reproduce_estimation_figure(out_dir, opt, points_override);
  throw ParamOutOfRange("unknown figure tag: " + figure);
}

}  // namespace metrocross
