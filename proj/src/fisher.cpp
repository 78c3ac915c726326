#include "metrocross/fisher.hpp"

#include <cmath>

namespace metrocross {

namespace {
constexpr double kClassicalEigCutoff = 1e-12;
constexpr double kClassicalDerivCutoff = 1e-9;
constexpr double kClassicalDelta = 1e-6;
}  // namespace

PhaseGenerator make_phase_generator(int n_qubits, const std::vector<int>& phase_sites) {
  PhaseGenerator g;
  g.n_qubits = n_qubits;
  g.phase_sites = phase_sites;
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  g.diag = RealVector::Zero(dim);
  for (int s : phase_sites) {
    if (s < 0 || s >= n_qubits) throw DimensionMismatch("make_phase_generator: site out of range");
    const Eigen::Index bit = Eigen::Index(1) << (n_qubits - 1 - s);
    for (Eigen::Index idx = 0; idx < dim; ++idx)
      if (idx & bit) g.diag[idx] += 1.0;
  }
  return g;
}

ComplexMatrix output_state(const ComplexVector& psi, const KrausChannel& ch, const SiteMap& sites,
                           double phi) {
  const Eigen::Index dim = Eigen::Index(1) << sites.n_qubits;
  if (psi.size() != dim) throw DimensionMismatch("output_state: state size does not match SiteMap");
  ComplexMatrix rho = psi * psi.adjoint();
  rho = apply_channel(rho, ch, sites);
  const PhaseGenerator g = make_phase_generator(sites);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      rho(i, j) *= std::exp(Complex(0, phi * (g.diag[i] - g.diag[j])));
  return rho;
}

ComplexMatrix drho_analytic(const ComplexMatrix& rho_phi, const PhaseGenerator& g) {
  const Eigen::Index dim = rho_phi.rows();
  if (g.diag.size() != dim) throw DimensionMismatch("drho_analytic: generator size mismatch");
  ComplexMatrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out(i, j) = Complex(0, g.diag[i] - g.diag[j]) * rho_phi(i, j);
  return out;
}

QfiResult qfi_eigen(const ComplexMatrix& rho_phi, const ComplexMatrix& drho) {
  if (rho_phi.rows() != drho.rows() || rho_phi.cols() != drho.cols())
    throw DimensionMismatch("qfi_eigen: rho and drho dimensions differ");
  if (hermiticity_error(drho) > tol::hermiticity)
    throw NonHermitianInput("qfi_eigen: drho deviates from Hermitian beyond tolerance");

  const EigenDecomposition ed = eigh(rho_phi);  // checks Hermiticity of rho
  const Eigen::Index n = ed.eigenvalues.size();
  const ComplexMatrix m = ed.eigenvectors.adjoint() * drho * ed.eigenvectors;

  QfiResult out;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (ed.eigenvalues[j] < tol::spectral_cutoff)
      out.discarded_weight += std::abs(ed.eigenvalues[j]);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double denom = ed.eigenvalues[j] + ed.eigenvalues[k];
      if (denom <= tol::spectral_cutoff) continue;
      out.value += 2.0 * std::norm(m(j, k)) / denom;
    }
  }
  return out;
}

double qfi_phase(const ComplexVector& psi, const KrausChannel& ch, const SiteMap& sites, double phi) {
  const ComplexMatrix rho = output_state(psi, ch, sites, phi);
  const PhaseGenerator g = make_phase_generator(sites);
  QfiResult r = qfi_eigen(rho, drho_analytic(rho, g));
  r.phi_eval = phi;
  return r.value;
}

double bures_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw DimensionMismatch("bures_fidelity: dimensions differ");
  const ComplexMatrix root = matrix_sqrt_psd(sigma);  // throws NotPSD
  const ComplexMatrix inner = root * rho * root;
  // inner is PSD up to roundoff; symmetrize before the spectral sum.
  const EigenDecomposition ed = eigh(0.5 * (inner + inner.adjoint()));
  double f = 0.0;
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    const double lam = ed.eigenvalues[i];
    if (lam < -tol::psd_clip) throw NotPSD("bures_fidelity: input not PSD");
    if (lam > 0.0) f += std::sqrt(lam);
  }
  return f;
}

double qfi_bures(const std::function<ComplexMatrix(double)>& state_at, double t, double dt) {
  if (!(dt > 0.0)) throw ParamOutOfRange("qfi_bures: dt must be positive");
  const ComplexMatrix lo = state_at(t - dt / 2.0);
  const ComplexMatrix hi = state_at(t + dt / 2.0);
  return 8.0 * (1.0 - bures_fidelity(lo, hi)) / (dt * dt);
}

namespace {

double classical_fisher_impl(const RealVector& lam, const RealVector& dlam) {
  if (lam.size() != dlam.size())
    throw DimensionMismatch("classical_fisher: eigenvalue/derivative size mismatch");
  double j = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < kClassicalEigCutoff) {
      if (std::abs(dlam[i]) < kClassicalDerivCutoff) continue;
      throw SingularEigenvalue("classical_fisher: vanishing eigenvalue with nonzero derivative");
    }
    j += dlam[i] * dlam[i] / lam[i];
  }
  return j;
}

}  // namespace

double classical_fisher(const std::function<RealVector(double)>& eigenvalues_at, double t) {
  const RealVector hi = eigenvalues_at(t + kClassicalDelta);
  const RealVector lo = eigenvalues_at(t - kClassicalDelta);
  if (hi.size() != lo.size()) throw DimensionMismatch("classical_fisher: spectrum size changed");
  const RealVector dlam = (hi - lo) / (2.0 * kClassicalDelta);
  return classical_fisher_impl(eigenvalues_at(t), dlam);
}

double classical_fisher(const std::function<RealVector(double)>& eigenvalues_at, double t,
                        const std::function<RealVector(double)>& derivatives_at) {
  return classical_fisher_impl(eigenvalues_at(t), derivatives_at(t));
}

}  // namespace metrocross
