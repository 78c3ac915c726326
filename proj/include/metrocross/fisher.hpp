#pragma once

#include <functional>

#include "metrocross/channels.hpp"

namespace metrocross {

// Diagonal generator of the lifted phase rotation: G = sum over phase sites
// of |1><1| at that site, i.e. G[idx] counts set bits of idx on phase sites.
struct PhaseGenerator {
  int n_qubits = 1;
  std::vector<int> phase_sites;
  RealVector diag;
};

PhaseGenerator make_phase_generator(int n_qubits, const std::vector<int>& phase_sites);
inline PhaseGenerator make_phase_generator(const SiteMap& sites) {
  return make_phase_generator(sites.n_qubits, sites.phase_sites);
}

struct QfiResult {
  double value = 0.0;
  double discarded_weight = 0.0;  // spectral weight of eigenvalues below the cutoff
  double phi_eval = 0.0;
};

// rho_phi = U_phi E[|psi><psi|] U_phi^dag, noise on noisy sites, phase on
// phase sites. Noise is applied first; the order is irrelevant for
// phase-covariant channels.
ComplexMatrix output_state(const ComplexVector& psi, const KrausChannel& ch, const SiteMap& sites,
                           double phi);

// i(G rho - rho G); exact d(rho_phi)/d(phi) for phase-covariant encoding.
ComplexMatrix drho_analytic(const ComplexMatrix& rho_phi, const PhaseGenerator& g);

// Spectral quantum Fisher information:
//   J = sum over eigenpairs with lambda_j + lambda_k > cutoff of
//       2 |<j| drho |k>|^2 / (lambda_j + lambda_k).
QfiResult qfi_eigen(const ComplexMatrix& rho_phi, const ComplexMatrix& drho);

// Full pipeline convenience: output_state -> drho_analytic -> qfi_eigen.
double qfi_phase(const ComplexVector& psi, const KrausChannel& ch, const SiteMap& sites,
                 double phi = 0.0);

// Tr sqrt(sqrt(sigma) rho sqrt(sigma)), symmetric within 1e-9.
double bures_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Symmetric-difference Bures QFI:
//   J(t) = 8 (1 - F[rho(t - dt/2), rho(t + dt/2)]) / dt^2.
double qfi_bures(const std::function<ComplexMatrix(double)>& state_at, double t, double dt = 1e-4);

// Classical Fisher information of an eigenvalue spectrum:
//   J = sum_i (lambda_i')^2 / lambda_i,
// derivative by central difference (delta = 1e-6) unless supplied.
// Eigenvalues below 1e-12 are dropped when their derivative is below 1e-9
// and raise SingularEigenvalue otherwise.
double classical_fisher(const std::function<RealVector(double)>& eigenvalues_at, double t);
double classical_fisher(const std::function<RealVector(double)>& eigenvalues_at, double t,
                        const std::function<RealVector(double)>& derivatives_at);

}  // namespace metrocross
