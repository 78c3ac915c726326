#include "metrocross/surface.hpp"

#include <cmath>

#include "metrocross/fisher.hpp"
#include "metrocross/parallel.hpp"

namespace metrocross {

double surface_eta_perp(double kappa, double eta_par) {
  const double arg = 1.0 + eta_par * eta_par - kappa * kappa;
  return arg > 0.0 ? std::sqrt(arg) / 2.0 : 0.0;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw ParamOutOfRange("linspace: need at least 2 points");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return out;
}

namespace {

SurfacePoint evaluate_point(double kappa, double eta_par, const OptimizerOptions& opt) {
  SurfacePoint pt;
  pt.kappa = kappa;
  pt.eta_par = eta_par;
  pt.eta_perp = surface_eta_perp(kappa, eta_par);

  PhaseCovariantParams params{kappa, eta_par, pt.eta_perp};
  if (!params.admissible()) {
    // boundary-roundoff nudge only; genuinely inadmissible points are skipped
    params.eta_perp -= 1e-9;
    if (params.kappa > 0) params.kappa -= 1e-9;
    if (params.kappa < 0) params.kappa += 1e-9;
    if (params.eta_par > 0) params.eta_par -= 1e-9;
  }
  if (!params.admissible() || !(params.eta_perp > 0.0)) {
    pt.note = "cptp";
    return pt;
  }
  pt.eta_perp = params.eta_perp;

  try {
    const KrausChannel ch = phase_covariant(params);
    const SiteMap ancilla_sites{2, {0}, {0}};
    const SiteMap parallel_sites{2, {0, 1}, {0, 1}};
    const ConvergenceReport anc = maximize(
        [&](const ComplexVector& psi) { return qfi_phase(psi, ch, ancilla_sites, 0.0); }, 2, opt);
    const ConvergenceReport par = maximize(
        [&](const ComplexVector& psi) { return qfi_phase(psi, ch, parallel_sites, 0.0); }, 2, opt);
    pt.qfi_ancilla = 2.0 * anc.best_value;  // per two channel uses
    pt.qfi_parallel = par.best_value;
    pt.difference = pt.qfi_ancilla - pt.qfi_parallel;
    pt.ok = true;
  } catch (const Error& e) {
    pt.note = e.what();
  }
  return pt;
}

}  // namespace

std::vector<SurfacePoint> surface(const std::vector<double>& kappas,
                                  const std::vector<double>& eta_pars,
                                  const OptimizerOptions& opt) {
  const std::ptrdiff_t nk = std::ptrdiff_t(kappas.size());
  const std::ptrdiff_t ne = std::ptrdiff_t(eta_pars.size());
  std::vector<SurfacePoint> out(std::size_t(nk * ne));
  parallel_for(nk * ne, [&](std::ptrdiff_t idx) {
    const std::ptrdiff_t ik = idx / ne;
    const std::ptrdiff_t ie = idx % ne;
    out[std::size_t(idx)] = evaluate_point(kappas[std::size_t(ik)], eta_pars[std::size_t(ie)], opt);
  });
  return out;
}

}  // namespace metrocross
