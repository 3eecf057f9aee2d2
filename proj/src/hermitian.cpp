#include "qfid/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qfid {

namespace {

void fix_column_phases(Matrix& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    for (Index i = 0; i < v.rows(); ++i) {
      double a = std::abs(v(i, j));
      if (a > 1e-12) {
        v.col(j) *= std::conj(v(i, j)) / a;
        break;
      }
    }
  }
}

RealVector psd_eigenvalues(const SpectralDecomposition& s) {
  RealVector lam = s.eigenvalues;
  for (Index i = 0; i < lam.size(); ++i) {
    require(lam(i) >= -tol::psd, ErrorCode::NotPsd,
            "matrix is not PSD: eigenvalue " + std::to_string(lam(i)));
    if (lam(i) < 0) lam(i) = 0;
  }
  return lam;
}

}  // namespace

void check_hermitian(const Matrix& a, double tolerance) {
  require(a.rows() == a.cols(), ErrorCode::DimMismatch, "matrix is not square");
  double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  require(dev <= tolerance, ErrorCode::NotHermitian,
          "matrix is not Hermitian: max deviation " + std::to_string(dev));
}

SpectralDecomposition eig_hermitian(const Matrix& a, double tolerance) {
  check_hermitian(a, tolerance);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  SpectralDecomposition s{es.eigenvalues(), es.eigenvectors()};
  fix_column_phases(s.eigenvectors);
  return s;
}

Index psd_rank(const Matrix& a, double rank_tol) {
  SpectralDecomposition s = eig_hermitian(a);
  RealVector lam = psd_eigenvalues(s);
  double lmax = lam.size() ? lam.maxCoeff() : 0.0;
  Index r = 0;
  for (Index i = 0; i < lam.size(); ++i)
    if (lam(i) > rank_tol * lmax) ++r;
  return r;
}

Matrix psd_sqrt(const Matrix& a) {
  SpectralDecomposition s = eig_hermitian(a);
  RealVector lam = psd_eigenvalues(s);
  // Round-off noise on an exact kernel turns into sqrt(eps)-sized entries of
  // the root; flooring well below any meaningful eigenvalue removes it.
  double lmax = lam.size() ? lam.maxCoeff() : 0.0;
  for (Index i = 0; i < lam.size(); ++i)
    if (lam(i) < 1e-13 * lmax) lam(i) = 0;
  return s.eigenvectors * lam.cwiseSqrt().asDiagonal() * s.eigenvectors.adjoint();
}

Matrix pinv_sqrt(const Matrix& a, double rank_tol) {
  SpectralDecomposition s = eig_hermitian(a);
  RealVector lam = psd_eigenvalues(s);
  double lmax = lam.size() ? lam.maxCoeff() : 0.0;
  RealVector inv = RealVector::Zero(lam.size());
  for (Index i = 0; i < lam.size(); ++i)
    if (lam(i) > rank_tol * lmax) inv(i) = 1.0 / std::sqrt(lam(i));
  return s.eigenvectors * inv.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix support_projector(const Matrix& a, double rank_tol) {
  SpectralDecomposition s = eig_hermitian(a);
  RealVector lam = psd_eigenvalues(s);
  double lmax = lam.size() ? lam.maxCoeff() : 0.0;
  RealVector ind = RealVector::Zero(lam.size());
  for (Index i = 0; i < lam.size(); ++i)
    if (lam(i) > rank_tol * lmax) ind(i) = 1.0;
  return s.eigenvectors * ind.asDiagonal() * s.eigenvectors.adjoint();
}

double trace_norm(const Matrix& t) {
  require(t.rows() == t.cols(), ErrorCode::DimMismatch, "matrix is not square");
  if (t.rows() <= 64) {
    Eigen::JacobiSVD<Matrix> svd(t);
    return svd.singularValues().sum();
  }
  Eigen::BDCSVD<Matrix> svd(t);
  return svd.singularValues().sum();
}

Matrix polar_unitary(const Matrix& a, const Matrix& b) {
  // Validates positivity of both factors before forming the product.
  psd_eigenvalues(eig_hermitian(a));
  psd_eigenvalues(eig_hermitian(b));
  require_same_dim(a, b);

  Matrix t = a * b;
  if (t.cwiseAbs().maxCoeff() < 1e-300)
    return Matrix::Identity(t.rows(), t.cols());  // canonical choice for AB = 0

  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // T = W S X^dag, |T| = X S X^dag, so V = W X^dag. The full SVD bases supply
  // matched orthonormal kernel completions, keeping V unitary.
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace qfid
