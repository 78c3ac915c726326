#pragma once

#include <Eigen/Dense>
#include <complex>

#include "metrocross/errors.hpp"

namespace metrocross {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Module-wide tolerances. These are constants rather than per-call knobs so
// every caller and every test sees the same numeric contract.
namespace tol {
inline constexpr double hermiticity = 1e-10;     // max |A - A^dag| accepted
inline constexpr double psd_clip = 1e-10;        // eigenvalues in [-psd_clip, 0] -> 0
inline constexpr double completeness = 1e-10;    // Kraus completeness residual
inline constexpr double spectral_cutoff = 1e-12; // lambda_j + lambda_k below this is skipped
inline constexpr double sqrt_residual = 1e-9;    // ||B^2 - A||_max for matrix_sqrt_psd
}  // namespace tol

// Hermitian eigendecomposition, eigenvalues sorted descending, eigenvectors
// as orthonormal columns in matching order.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

double max_abs(const ComplexMatrix& a);
double hermiticity_error(const ComplexMatrix& a);

// Kronecker product, row-major qubit convention: qubit 0 is the most
// significant bit of the basis index (fixed project-wide).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws NonHermitianInput if max |A - A^dag| exceeds tol::hermiticity.
EigenDecomposition eigh(const ComplexMatrix& a);

// Hermitian PSD square root. Eigenvalues in [-tol::psd_clip, 0] are clipped
// to zero; anything more negative throws NotPSD.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

// --- small state constructors -------------------------------------------

ComplexVector basis_state(int n_qubits, int index);
ComplexVector plus_state(int n_qubits);
ComplexVector ghz_state(int n_qubits);

}  // namespace metrocross
