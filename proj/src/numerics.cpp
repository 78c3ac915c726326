#include "metrocross/numerics.hpp"

#include <cmath>

namespace metrocross {

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

double hermiticity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("hermiticity_error: matrix not square");
  return max_abs(a - a.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

EigenDecomposition eigh(const ComplexMatrix& a) {
  if (hermiticity_error(a) > tol::hermiticity)
    throw NonHermitianInput("eigh: input deviates from Hermitian beyond tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) throw Error("eigh: eigensolver did not converge");
  // Eigen sorts ascending; flip to descending.
  const Eigen::Index n = a.rows();
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
  EigenDecomposition ed = eigh(a);
  RealVector lam = ed.eigenvalues;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < -tol::psd_clip) throw NotPSD("matrix_sqrt_psd: negative eigenvalue beyond clip tolerance");
    if (lam[i] < 0.0) lam[i] = 0.0;
  }
  return ed.eigenvectors * lam.cwiseSqrt().asDiagonal() * ed.eigenvectors.adjoint();
}

ComplexVector basis_state(int n_qubits, int index) {
  const int dim = 1 << n_qubits;
  if (index < 0 || index >= dim) throw ParamOutOfRange("basis_state: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v[index] = 1.0;
  return v;
}

ComplexVector plus_state(int n_qubits) {
  const int dim = 1 << n_qubits;
  return ComplexVector::Constant(dim, 1.0 / std::sqrt(double(dim)));
}

ComplexVector ghz_state(int n_qubits) {
  const int dim = 1 << n_qubits;
  ComplexVector v = ComplexVector::Zero(dim);
  v[0] = v[dim - 1] = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace metrocross
