#include "metrocross/strategies.hpp"

#include <cmath>

#include "metrocross/closed_forms.hpp"

namespace metrocross {

std::string strategy_kind_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Parallel: return "parallel";
    case StrategyKind::AncillaAssisted: return "ancilla";
    case StrategyKind::Intermediate: return "intermediate";
    case StrategyKind::Classical: return "classical";
    case StrategyKind::Sequential: return "sequential";
  }
  throw ParamOutOfRange("strategy_kind_name: bad enum value");
}

StrategyKind strategy_kind_from_name(const std::string& name) {
  if (name == "parallel") return StrategyKind::Parallel;
  if (name == "ancilla" || name == "ancilla-assisted") return StrategyKind::AncillaAssisted;
  if (name == "intermediate") return StrategyKind::Intermediate;
  if (name == "classical") return StrategyKind::Classical;
  if (name == "sequential") return StrategyKind::Sequential;
  throw ParamOutOfRange("unknown strategy kind: " + name);
}

StrategyConfig StrategyConfig::make(StrategyKind kind, int n_uses) {
  if (n_uses < 1) throw ParamOutOfRange("StrategyConfig: n_uses must be >= 1");
  StrategyConfig cfg;
  cfg.kind = kind;
  cfg.n_uses = n_uses;
  switch (kind) {
    case StrategyKind::Parallel:
      cfg.block_probes = n_uses;
      cfg.block_ancillas = 0;
      cfg.repetitions = 1;
      break;
    case StrategyKind::AncillaAssisted:
      cfg.block_probes = 1;
      cfg.block_ancillas = 1;
      cfg.repetitions = n_uses;
      break;
    case StrategyKind::Intermediate:
      if (n_uses % 2 != 0)
        throw ParamOutOfRange("StrategyConfig: intermediate strategy needs even n_uses");
      cfg.block_probes = 2;
      cfg.block_ancillas = 1;
      cfg.repetitions = n_uses / 2;
      break;
    case StrategyKind::Classical:
      cfg.block_probes = 1;
      cfg.block_ancillas = 0;
      cfg.repetitions = n_uses;
      break;
    case StrategyKind::Sequential:
      cfg.block_probes = 1;
      cfg.block_ancillas = 0;
      cfg.repetitions = n_uses;  // passes
      break;
  }
  cfg.validate();
  return cfg;
}

void StrategyConfig::validate() const {
  if (n_uses < 1 || block_probes < 1 || block_ancillas < 0 || repetitions < 1)
    throw ParamOutOfRange("StrategyConfig: counts must be positive");
  if (kind != StrategyKind::Sequential && block_probes * repetitions != n_uses)
    throw ParamOutOfRange("StrategyConfig: n_uses != block_probes * repetitions");
  if (block_qubits() > 8) throw ParamOutOfRange("StrategyConfig: block too large");
}

SiteMap StrategyConfig::block_sites() const {
  SiteMap sites;
  sites.n_qubits = block_qubits();
  for (int s = 0; s < block_probes; ++s) {
    sites.noisy_sites.push_back(s);
    sites.phase_sites.push_back(s);
  }
  return sites;
}

namespace {

// Two-probe family eps/sqrt2 (|00>+|11>) + sqrt(1-eps^2)/sqrt2 (|01>+|10>),
// the high-noise depolarizing optimum shape.
ComplexVector depol_family_state(double eps) {
  ComplexVector v(4);
  const double a = eps / std::sqrt(2.0);
  const double b = std::sqrt(std::max(1.0 - eps * eps, 0.0)) / std::sqrt(2.0);
  v << a, b, b, a;
  return v;
}

ComplexVector adc_pair_state(double amp00) {
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = amp00;
  v[3] = std::sqrt(std::max(1.0 - amp00 * amp00, 0.0));
  return v;
}

// Closed-form optima injected as structured seeds where known.
std::vector<ComplexVector> structured_seeds(const StrategyConfig& cfg, ChannelKind channel,
                                            double eta) {
  std::vector<ComplexVector> seeds;
  const int nq = cfg.block_qubits();
  if (nq == 2) {
    if (channel == ChannelKind::AmplitudeDamping) {
      if (cfg.kind == StrategyKind::AncillaAssisted)
        seeds.push_back(adc_pair_state(closed_forms::adc_alpha(eta)));
      if (cfg.kind == StrategyKind::Parallel)
        seeds.push_back(adc_pair_state(closed_forms::adc_epsilon(eta)));
    }
    if (channel == ChannelKind::Depolarizing && cfg.kind == StrategyKind::Parallel) {
      seeds.push_back(depol_family_state(0.95));
      seeds.push_back(depol_family_state(0.8));
    }
  }
  if (cfg.kind == StrategyKind::Parallel && nq == 4) {
    const ComplexVector bell = ghz_state(2);
    seeds.push_back(kron(bell, bell).col(0));  // pair of Bell blocks
  }
  return seeds;
}

}  // namespace

StrategyEvaluation evaluate(const StrategyConfig& cfg, ChannelKind channel, double eta,
                            const OptimizerOptions& opt,
                            const std::vector<ComplexVector>& warm_seeds) {
  cfg.validate();
  if (cfg.kind == StrategyKind::Sequential)
    throw ParamOutOfRange("evaluate: sequential strategy is not defined for phase estimation");

  const KrausChannel ch = make_channel(channel, eta);
  const SiteMap sites = cfg.block_sites();

  StrategyEvaluation ev;
  ev.eta = eta;

  if (cfg.kind == StrategyKind::Classical && !opt.optimize_classical) {
    ev.optimal_state = plus_state(1);
    ev.block_qfi = qfi_phase(ev.optimal_state, ch, sites, 0.0);
    ev.report.best_value = ev.block_qfi;
    ev.report.best_state = ev.optimal_state;
    ev.report.starts_converged = 1;
    ev.report.spread = 0.0;
  } else {
    auto objective = [&](const ComplexVector& psi) { return qfi_phase(psi, ch, sites, 0.0); };
    std::vector<ComplexVector> extra = structured_seeds(cfg, channel, eta);
    extra.insert(extra.end(), warm_seeds.begin(), warm_seeds.end());
    ev.report = maximize(objective, cfg.block_qubits(), opt, extra);
    ev.block_qfi = ev.report.best_value;
    ev.optimal_state = ev.report.best_state;
  }
  ev.total_qfi = double(cfg.repetitions) * ev.block_qfi;
  return ev;
}

double classical_reference(ChannelKind channel, double eta, int n) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParamOutOfRange("classical_reference: eta outside [0,1]");
  switch (channel) {
    case ChannelKind::PauliXY:
    case ChannelKind::Depolarizing:
      return n * closed_forms::classical_block_qfi_xy_or_depol(eta);
    case ChannelKind::AmplitudeDamping:
      return n * closed_forms::classical_block_qfi_adc(eta);
    default:
      throw UnknownChannelKind("classical_reference: no closed form for this channel kind");
  }
}

std::optional<double> literature_bound(ChannelKind channel, double eta, int n) {
  switch (channel) {
    case ChannelKind::PauliXY:
      return std::nullopt;
    case ChannelKind::Depolarizing: {
      if (!(eta > 0.0 && eta < 1.0))
        throw ParamOutOfRange("literature_bound: defined on open interval (0,1)");
      const double p = std::pow(1.0 - eta, 1.25);
      return n * p / (1.0 - p);
    }
    case ChannelKind::AmplitudeDamping:
      if (!(eta > 0.0 && eta < 1.0))
        throw ParamOutOfRange("literature_bound: defined on open interval (0,1)");
      return n * eta / (1.0 - eta);
    default:
      throw UnknownChannelKind("literature_bound: no bound for this channel kind");
  }
}

CrossoverResult crossover(const StrategyConfig& a, const StrategyConfig& b, ChannelKind channel,
                          double eta_lo, double eta_hi, double tol, const OptimizerOptions& opt) {
  if (!(eta_lo < eta_hi)) throw ParamOutOfRange("crossover: bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw ParamOutOfRange("crossover: tol must be positive");

  std::vector<ComplexVector> warm_a, warm_b;
  int evaluations = 0;
  auto diff = [&](double eta) {
    const StrategyEvaluation ea = evaluate(a, channel, eta, opt, warm_a);
    const StrategyEvaluation eb = evaluate(b, channel, eta, opt, warm_b);
    warm_a.assign(1, ea.optimal_state);
    warm_b.assign(1, eb.optimal_state);
    evaluations += 2;
    return std::pair<double, std::pair<double, double>>{ea.total_qfi - eb.total_qfi,
                                                        {ea.total_qfi, eb.total_qfi}};
  };

  double lo = eta_lo, hi = eta_hi;
  auto exact_hit = [&](double eta, const std::pair<double, double>& q) {
    CrossoverResult out;
    out.eta_star = out.bracket_lo = out.bracket_hi = eta;
    out.qfi_a = q.first;
    out.qfi_b = q.second;
    out.evaluations = evaluations;
    return out;
  };
  auto [f_lo, q_lo] = diff(lo);
  if (f_lo == 0.0) return exact_hit(lo, q_lo);
  auto [f_hi, q_hi] = diff(hi);
  if (f_hi == 0.0) return exact_hit(hi, q_hi);
  if (f_lo * f_hi > 0.0)
    throw NoSignChange("crossover: QFI difference has the same sign at both bracket ends");

  std::pair<double, double> q_mid = q_lo;
  double mid = 0.5 * (lo + hi);
  while (hi - lo > tol) {
    mid = 0.5 * (lo + hi);
    auto [f_mid, q] = diff(mid);
    q_mid = q;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (f_mid * f_lo < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }

  CrossoverResult out;
  out.eta_star = 0.5 * (lo + hi);
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.qfi_a = q_mid.first;
  out.qfi_b = q_mid.second;
  out.evaluations = evaluations;
  return out;
}

AdcConfigRatios adc_config_ratios(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw ParamOutOfRange("adc_config_ratios: eta outside (0,1)");
  AdcConfigRatios out;
  out.alpha = closed_forms::adc_alpha(eta);
  out.epsilon = closed_forms::adc_epsilon(eta);
  const ComplexVector psi = adc_pair_state(out.alpha);
  const KrausChannel ch = amplitude_damping(eta);

  const SiteMap both_phase{2, {0, 1}, {0, 1}};
  const SiteMap one_phase{2, {0, 1}, {0}};
  const SiteMap ancilla{2, {0}, {0}};

  const double j_i = qfi_phase(psi, ch, both_phase, 0.0);
  const double j_ii = qfi_phase(psi, ch, one_phase, 0.0);
  const double j_iii = qfi_phase(psi, ch, ancilla, 0.0);
  out.ratio_i_over_ii = j_i / j_ii;
  out.ratio_iii_over_ii = j_iii / j_ii;
  return out;
}

}  // namespace metrocross
