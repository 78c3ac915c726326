#pragma once

#include <string>
#include <vector>

#include "metrocross/optimizer.hpp"

namespace metrocross {

// One point of the phase-covariant N=2 strategy-difference study:
// eta_perp is tied to (kappa, eta_par) at its maximal admissible value and
// difference = (ancilla-assisted total per 2 uses) - (optimal 2-probe QFI).
struct SurfacePoint {
  double kappa = 0.0;
  double eta_par = 0.0;
  double eta_perp = 0.0;
  double qfi_ancilla = 0.0;
  double qfi_parallel = 0.0;
  double difference = 0.0;
  bool ok = false;
  std::string note;  // "cptp" for inadmissible points, error text on optimizer failure
};

// sqrt(1 + eta_par^2 - kappa^2) / 2, the largest eta_perp the CPTP
// conditions allow at fixed (kappa, eta_par).
double surface_eta_perp(double kappa, double eta_par);

// Evaluates the grid (row-major: kappa outer, eta_par inner), optimizing
// both strategies per point. Inadmissible points are nudged by 1e-9 into
// the feasible region first and reported (ok = false) if still outside;
// per-point optimizer failures are reported the same way without aborting.
std::vector<SurfacePoint> surface(const std::vector<double>& kappas,
                                  const std::vector<double>& eta_pars,
                                  const OptimizerOptions& opt);

// Uniform grid helper: n points covering [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace metrocross
