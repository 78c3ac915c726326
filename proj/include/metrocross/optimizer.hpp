#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "metrocross/numerics.hpp"

namespace metrocross {

struct OptimizerOptions {
  int n_starts = 32;
  std::uint64_t seed = 42;
  int max_iters = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-8;
  bool restrict_real = false;
  bool restrict_symmetric = false;
  // strategies: optimize the classical product state instead of fixing |+>.
  bool optimize_classical = false;

  void validate() const;
};

// Chart over pure states with global phase and normalization removed: the
// first amplitude is pinned real nonnegative (projective chart anchored at
// |0...0>). Unrestricted parameter count is 2*2^n - 2. restrict_real drops
// the imaginary parts; restrict_symmetric keeps one amplitude per
// set-bit-count class (permutation-symmetric states).
class StateParametrization {
 public:
  StateParametrization(int n_qubits, bool restrict_real = false, bool restrict_symmetric = false);

  int n_qubits() const { return n_qubits_; }
  int param_count() const;

  ComplexVector decode(const std::vector<double>& params) const;  // unit norm, gauge-fixed
  std::vector<double> encode(const ComplexVector& state) const;   // inverse up to global phase

 private:
  int n_qubits_;
  bool real_;
  bool symmetric_;
  std::vector<int> class_of_index_;   // symmetric chart: basis index -> class
  std::vector<int> class_rep_index_;  // symmetric chart: class -> representative index
};

struct ConvergenceReport {
  double best_value = 0.0;
  std::vector<double> best_params;
  ComplexVector best_state;
  int starts_converged = 0;
  double spread = 0.0;  // max - min of converged local optima
};

// Multi-start adaptive Nelder-Mead maximization of `objective` over pure
// states of n_qubits qubits. Starts are the structured seeds (GHZ, |+>^n,
// caller-supplied closed-form states, |0...0>) followed by deterministic
// pseudo-random states derived from opt.seed; results merge by start index,
// so reports are bitwise reproducible for fixed options. Ties within f_tol
// break toward the largest overlap with the first structured seed.
ConvergenceReport maximize(const std::function<double(const ComplexVector&)>& objective,
                           int n_qubits, const OptimizerOptions& opt,
                           const std::vector<ComplexVector>& extra_seeds = {});

}  // namespace metrocross
