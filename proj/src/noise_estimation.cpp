#include "metrocross/noise_estimation.hpp"

#include <cmath>

namespace metrocross {

namespace {
void check_interior(double t, const char* who) {
  if (!(t > 0.0 && t < 1.0)) throw ParamOutOfRange(std::string(who) + ": t must lie in (0, 1)");
}
}  // namespace

double sequential_fi(double t, int passes) {
  check_interior(t, "sequential_fi");
  switch (passes) {
    case 1:
      return 1.0 / (2.0 * t - t * t);
    case 2: {
      const double p = t;
      return 4.0 * (p - 1.0) * (p - 1.0) / ((2.0 - p) * p * (p * p - 2.0 * p + 2.0));
    }
    case 3: {
      const double p = t;
      const double num = -9.0 * std::pow(p - 1.0, 4);
      const double den = p * (p * p - 3.0 * p + 3.0) * (p * p * p - 3.0 * p * p + 3.0 * p - 2.0);
      return num / den;
    }
    default:
      throw ParamOutOfRange("sequential_fi: passes must be 1, 2 or 3");
  }
}

double noon_fi(double t) {
  check_interior(t, "noon_fi");
  const double a = 3.0 / (3.0 * t * t - 6.0 * t + 4.0);
  const double b = 4.0 / ((t - 2.0) * (t - 2.0) * t * t);
  return 0.75 * (t - 1.0) * (t - 1.0) * (2.0 * t - t * t) * (a + b);
}

double ancilla_fi(double t) {
  check_interior(t, "ancilla_fi");
  return 3.0 / (4.0 * t - 3.0 * t * t);
}

RealVector sequential_output_spectrum(double t, int passes) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParamOutOfRange("sequential_output_spectrum: t outside [0,1]");
  if (passes < 1) throw ParamOutOfRange("sequential_output_spectrum: passes must be >= 1");
  const KrausChannel ch = depolarizing(t, DepolSymbol::T);
  const SiteMap site{1, {0}, {}};
  const ComplexVector probe = plus_state(1);
  ComplexMatrix rho = probe * probe.adjoint();
  for (int k = 0; k < passes; ++k) rho = apply_channel(rho, ch, site);
  return eigh(rho).eigenvalues;
}

ComplexMatrix two_probe_output(const ComplexVector& psi, double t) {
  const KrausChannel ch = depolarizing(t, DepolSymbol::T);
  const SiteMap sites{2, {0, 1}, {}};
  return apply_channel(psi * psi.adjoint(), ch, sites);
}

ComplexMatrix probe_ancilla_output(double t) {
  const KrausChannel ch = depolarizing(t, DepolSymbol::T);
  const SiteMap sites{2, {0}, {}};
  const ComplexVector bell = ghz_state(2);
  return apply_channel(bell * bell.adjoint(), ch, sites);
}

TwoProbeOptimum optimal_two_probe_fi(double t, const OptimizerOptions& opt) {
  check_interior(t, "optimal_two_probe_fi");
  auto objective = [t](const ComplexVector& psi) {
    return qfi_bures([&psi](double s) { return two_probe_output(psi, s); }, t);
  };
  TwoProbeOptimum out;
  out.report = maximize(objective, 2, opt);
  out.value = out.report.best_value;
  out.state = out.report.best_state;
  return out;
}

double four_qubit_ancilla_check(double t, const OptimizerOptions& opt) {
  check_interior(t, "four_qubit_ancilla_check");
  const SiteMap sites{4, {0, 1}, {}};  // two probes, two noiseless ancillae
  auto objective = [t, &sites](const ComplexVector& psi) {
    const ComplexMatrix rho = psi * psi.adjoint();
    return qfi_bures(
        [&](double s) { return apply_channel(rho, depolarizing(s, DepolSymbol::T), sites); }, t);
  };
  // Probe-ancilla Bell pairs: probes are qubits 0,1 so the pairing is
  // (0,2) and (1,3); the pair state sums basis kets with qubit0==qubit2
  // and qubit1==qubit3.
  ComplexVector paired = ComplexVector::Zero(16);
  for (int a : {0, 1})
    for (int b : {0, 1}) paired[a * 8 + b * 4 + a * 2 + b] = 0.5;
  const ConvergenceReport report = maximize(objective, 4, opt, {paired});
  return report.best_value - 2.0 * ancilla_fi(t);
}

}  // namespace metrocross
