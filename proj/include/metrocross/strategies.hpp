#pragma once

#include <optional>
#include <string>

#include "metrocross/fisher.hpp"
#include "metrocross/optimizer.hpp"

namespace metrocross {

// How N channel uses are spent. Phase-estimation strategies split the N uses
// into identical blocks; the total QFI is repetitions x block QFI (additivity
// over product blocks). Sequential is defined for noise estimation only.
enum class StrategyKind { Parallel, AncillaAssisted, Intermediate, Classical, Sequential };

std::string strategy_kind_name(StrategyKind kind);
StrategyKind strategy_kind_from_name(const std::string& name);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Parallel;
  int n_uses = 2;
  int block_probes = 2;
  int block_ancillas = 0;
  int repetitions = 1;

  // parallel: one block of N probes; ancilla_assisted: N blocks of
  // (1 probe + 1 ancilla); intermediate: N/2 blocks of (2 probes + 1
  // ancilla), even N only; classical: N single-qubit probes.
  static StrategyConfig make(StrategyKind kind, int n_uses);

  int block_qubits() const { return block_probes + block_ancillas; }
  SiteMap block_sites() const;  // probes first, noisy = phase = probe sites
  void validate() const;
};

struct StrategyEvaluation {
  double eta = 0.0;
  double total_qfi = 0.0;
  double block_qfi = 0.0;
  ComplexVector optimal_state;  // block state
  ConvergenceReport report;
};

// Optimizes the block state for the given channel and noise level.
// warm_seeds are injected as additional structured seeds (used by crossover
// to warm-start from neighboring grid points).
StrategyEvaluation evaluate(const StrategyConfig& cfg, ChannelKind channel, double eta,
                            const OptimizerOptions& opt,
                            const std::vector<ComplexVector>& warm_seeds = {});

// N (1-eta)^2 for pauli x-y and depolarizing, N (1-eta) for amplitude damping.
double classical_reference(ChannelKind channel, double eta, int n);

// Published large-N upper bounds for the ancilla-free parallel strategy:
// depolarizing N (1-eta)^{5/4} / (1 - (1-eta)^{5/4}); amplitude damping
// N eta/(1-eta) as printed (see README note on its monotonicity); none for
// pauli x-y. Defined on the open interval eta in (0, 1).
std::optional<double> literature_bound(ChannelKind channel, double eta, int n);

struct CrossoverResult {
  double eta_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double qfi_a = 0.0;  // totals at eta_star
  double qfi_b = 0.0;
  int evaluations = 0;
};

// Bisection on the sign of total_qfi(a) - total_qfi(b), both freshly
// optimized at each midpoint with warm starts injected from the previous
// iterations. Pre: exactly one sign change on [eta_lo, eta_hi].
CrossoverResult crossover(const StrategyConfig& a, const StrategyConfig& b, ChannelKind channel,
                          double eta_lo, double eta_hi, double tol, const OptimizerOptions& opt);

// QFI of the amplitude-damping optimal state alpha(eta)|00> + ...|11> in
// three two-qubit configurations:
//   (i)   noise and phase on both qubits,
//   (ii)  noise on both qubits, phase on one,
//   (iii) noise and phase on one qubit, the other untouched (ancilla).
// Returns the ratios (i)/(ii) and (iii)/(ii); both equal 4 and 2 exactly at
// eta = 1/2, where alpha coincides with the two-probe epsilon.
struct AdcConfigRatios {
  double ratio_i_over_ii = 0.0;
  double ratio_iii_over_ii = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
};

AdcConfigRatios adc_config_ratios(double eta);

}  // namespace metrocross
