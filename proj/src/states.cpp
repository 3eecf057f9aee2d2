#include "qfid/states.hpp"

namespace qfid {

DensityMatrix::DensityMatrix(Matrix entries, double trace_tol) : mat_(std::move(entries)) {
  check_hermitian(mat_);
  SpectralDecomposition s = eig_hermitian(mat_);
  require(s.eigenvalues.minCoeff() >= -tol::psd, ErrorCode::NotPsd,
          "density matrix has negative eigenvalue " + std::to_string(s.eigenvalues.minCoeff()));
  double tr = mat_.trace().real();
  require(std::abs(tr - 1.0) <= trace_tol, ErrorCode::InvalidArgument,
          "density matrix trace is " + std::to_string(tr) + ", expected 1");
}

DensityMatrix DensityMatrix::from_pure(const Vector& amplitudes) {
  Vector v = amplitudes / amplitudes.norm();
  return DensityMatrix(v * v.adjoint());
}

PureState::PureState(Vector amps) : amplitudes(std::move(amps)) {
  require(std::abs(amplitudes.norm() - 1.0) <= tol::trace, ErrorCode::InvalidArgument,
          "state vector is not normalized");
}

Purification::Purification(Index sys, Index anc, PureState s)
    : system_dim(sys), ancilla_dim(anc), state(std::move(s)) {
  require(state.dim() == sys * anc, ErrorCode::DimMismatch,
          "purification vector length does not match system_dim * ancilla_dim");
}

Purification purify(const DensityMatrix& rho, Index ancilla_dim) {
  SpectralDecomposition s = eig_hermitian(rho.matrix());
  double lmax = s.eigenvalues.maxCoeff();

  std::vector<Index> support;
  for (Index i = 0; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues(i) > tol::rank * lmax) support.push_back(i);

  require(ancilla_dim >= static_cast<Index>(support.size()), ErrorCode::AncillaTooSmall,
          "ancilla_dim " + std::to_string(ancilla_dim) + " < rank " +
              std::to_string(support.size()));

  Index d = rho.dim();
  Vector psi = Vector::Zero(d * ancilla_dim);
  for (Index k = 0; k < static_cast<Index>(support.size()); ++k) {
    Index i = support[k];
    double w = std::sqrt(std::max(s.eigenvalues(i), 0.0));
    for (Index a = 0; a < d; ++a) psi(a * ancilla_dim + k) += w * s.eigenvectors(a, i);
  }
  psi /= psi.norm();
  return Purification(d, ancilla_dim, PureState(psi));
}

DensityMatrix partial_trace_ancilla(const Purification& psi) {
  Index d = psi.system_dim, k = psi.ancilla_dim;
  Matrix rho = Matrix::Zero(d, d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index m = 0; m < k; ++m)
        rho(a, b) += psi.state.amplitudes(a * k + m) * std::conj(psi.state.amplitudes(b * k + m));
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density(Index dim, Index rank, Rng& rng) {
  require(rank >= 1 && rank <= dim, ErrorCode::InvalidArgument,
          "rank must lie in [1, dim]");
  Matrix g = rng.ginibre(dim, rank);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

PureState random_pure(Index dim, Rng& rng) {
  Vector v = rng.ginibre(dim, 1).col(0);
  return PureState(v / v.norm());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qfid
