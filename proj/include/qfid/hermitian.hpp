#pragma once

#include "qfid/matrix.hpp"

namespace qfid {

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, eigenvector
// columns unitary, each column phased so its first nonzero component is real
// positive (deterministic across runs and platforms).
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

// Throws NotHermitian if max |A - A^dag| entry exceeds tol.
void check_hermitian(const Matrix& a, double tolerance = tol::herm);

SpectralDecomposition eig_hermitian(const Matrix& a, double tolerance = tol::herm);

// Number of eigenvalues above rank_tol * lambda_max; input must be PSD.
Index psd_rank(const Matrix& a, double rank_tol = tol::rank);

// PSD square root. Eigenvalues in [-tol::psd, 0) are clipped to 0 first;
// anything below -tol::psd raises NotPsd.
Matrix psd_sqrt(const Matrix& a);

// Inverse square root on the support of a PSD matrix; eigenvalues at or below
// rank_tol * lambda_max are treated as kernel and mapped to 0.
Matrix pinv_sqrt(const Matrix& a, double rank_tol = tol::rank);

// Orthogonal projector onto the support of a PSD matrix.
Matrix support_projector(const Matrix& a, double rank_tol = tol::rank);

// Sum of singular values.
double trace_norm(const Matrix& t);

// Unitary V with A*B = V*|A*B| for PSD A, B. On the kernel of |AB| the factor
// is completed deterministically from the SVD bases; the zero product maps to
// the identity.
Matrix polar_unitary(const Matrix& a, const Matrix& b);

}  // namespace qfid
