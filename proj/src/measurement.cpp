#include "qfid/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qfid/fidelity.hpp"

namespace qfid {

namespace {
Matrix hermitize(const Matrix& a) { return (a + a.adjoint()) / 2.0; }
}  // namespace

Povm::Povm(std::vector<Matrix> effects) : effects_(std::move(effects)) {
  require(!effects_.empty(), ErrorCode::InvalidPovm, "POVM has no effects");
  Index d = effects_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : effects_) {
    require(e.rows() == d && e.cols() == d, ErrorCode::DimMismatch,
            "POVM effects have mixed dimensions");
    check_hermitian(e);
    sum += e;
  }
  // Full eigenvalue positivity check at desk scale; large lifted sweeps rely
  // on the construction plus the cheap diagonal necessary condition.
  for (const Matrix& e : effects_) {
    if (d <= 128) {
      SpectralDecomposition s = eig_hermitian(e);
      require(s.eigenvalues.minCoeff() >= -tol::psd, ErrorCode::InvalidPovm,
              "POVM effect is not PSD");
    } else {
      require(e.diagonal().real().minCoeff() >= -tol::psd, ErrorCode::InvalidPovm,
              "POVM effect is not PSD");
    }
  }
  double dev = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  require(dev <= tol::povm, ErrorCode::InvalidPovm,
          "POVM effects do not sum to identity: max deviation " + std::to_string(dev));
}

ClassicalDistribution induced_distribution(const DensityMatrix& state, const Povm& povm) {
  require(state.dim() == povm.dim(), ErrorCode::DimMismatch,
          "state and POVM dimensions differ");
  RealVector p(povm.size());
  for (Index m = 0; m < povm.size(); ++m) {
    double pm = trace_product(state.matrix(), povm.effect(m)).real();
    p(m) = std::max(pm, 0.0);
  }
  double s = p.sum();
  require(std::abs(s - 1.0) <= tol::povm, ErrorCode::InvalidPovm,
          "induced probabilities sum to " + std::to_string(s));
  p /= s;
  return {p};
}

double classical_fidelity(const ClassicalDistribution& p, const ClassicalDistribution& q) {
  require(p.size() == q.size(), ErrorCode::DimMismatch, "distribution lengths differ");
  double f = 0;
  for (Index m = 0; m < p.size(); ++m)
    f += std::sqrt(std::max(p.probabilities(m), 0.0) * std::max(q.probabilities(m), 0.0));
  return std::clamp(f, 0.0, 1.0);
}

double classical_trace_distance(const ClassicalDistribution& p, const ClassicalDistribution& q) {
  require(p.size() == q.size(), ErrorCode::DimMismatch, "distribution lengths differ");
  return 0.5 * (p.probabilities - q.probabilities).cwiseAbs().sum();
}

MOperator m_operator(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  Matrix sr = psd_sqrt(rho.matrix());
  // sqrt(sqrt(rho) sigma sqrt(rho)) is |sqrt(sigma) sqrt(rho)|; the SVD of the
  // product avoids squaring its condition number.
  Matrix t = psd_sqrt(sigma.matrix()) * sr;
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullV);
  Matrix inner = svd.matrixV() * svd.singularValues().cast<Complex>().asDiagonal() *
                 svd.matrixV().adjoint();
  Matrix s = pinv_sqrt(rho.matrix());
  MOperator m;
  m.matrix = hermitize(s * inner * s);
  m.is_diagonalizable = true;
  m.support_projector = support_projector(rho.matrix());
  return m;
}

Povm fidelity_optimal_povm(const DensityMatrix& rho, const DensityMatrix& sigma) {
  MOperator m = m_operator(rho, sigma);
  // The zero eigenspace of M spans both ker(rho) and part of its support; the
  // attainment argument needs a basis compatible with that split, so M is
  // diagonalized on the support of rho and extended by a kernel basis.
  SpectralDecomposition rs = eig_hermitian(rho.matrix());
  double lmax = rs.eigenvalues.maxCoeff();
  std::vector<Index> sup, ker;
  for (Index i = 0; i < rho.dim(); ++i)
    (rs.eigenvalues(i) > tol::rank * lmax ? sup : ker).push_back(i);

  Matrix us(rho.dim(), static_cast<Index>(sup.size()));
  for (std::size_t k = 0; k < sup.size(); ++k) us.col(static_cast<Index>(k)) = rs.eigenvectors.col(sup[k]);
  SpectralDecomposition ms = eig_hermitian(hermitize(us.adjoint() * m.matrix * us));

  std::vector<Matrix> effects;
  effects.reserve(rho.dim());
  for (Index k = 0; k < ms.eigenvectors.cols(); ++k) {
    Vector v = us * ms.eigenvectors.col(k);
    effects.push_back(v * v.adjoint());
  }
  for (Index i : ker) {
    Vector v = rs.eigenvectors.col(i);
    effects.push_back(v * v.adjoint());
  }
  return Povm(std::move(effects));
}

LiftedPovm lifted_truncation_povm(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  Index trunc_dim) {
  return lifted_truncation_povm(rho, sigma, trunc_dim, fidelity(rho, sigma));
}

LiftedPovm lifted_truncation_povm(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  Index trunc_dim, double reference_fidelity) {
  require_same_dim(rho.matrix(), sigma.matrix());
  Index d = rho.dim();
  require(trunc_dim >= 1 && trunc_dim <= d, ErrorCode::InvalidTruncation,
          "trunc_dim must lie in [1, dim]");

  // Top trunc_dim eigenvectors of rho by descending eigenvalue.
  SpectralDecomposition s = eig_hermitian(rho.matrix());
  std::vector<Index> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::sort(idx.begin(), idx.end(),
            [&](Index a, Index b) { return s.eigenvalues(a) > s.eigenvalues(b); });
  Matrix w(d, trunc_dim);
  for (Index k = 0; k < trunc_dim; ++k) w.col(k) = s.eigenvectors.col(idx[static_cast<std::size_t>(k)]);

  Matrix rho0 = hermitize(w.adjoint() * rho.matrix() * w);
  Matrix sigma0 = hermitize(w.adjoint() * sigma.matrix() * w);
  double alpha = rho0.trace().real();
  double beta = sigma0.trace().real();
  require(alpha >= 1e-12 && beta >= 1e-12, ErrorCode::InvalidTruncation,
          "truncated mass vanishes");

  Povm inner = fidelity_optimal_povm(DensityMatrix(rho0 / alpha, 1e-8),
                                     DensityMatrix(sigma0 / beta, 1e-8));

  double scale = std::sqrt(alpha * beta);
  Matrix proj = w * w.adjoint();
  std::vector<Matrix> effects;
  effects.reserve(static_cast<std::size_t>(trunc_dim) + 2);
  effects.push_back(Matrix::Identity(d, d) - scale * proj);  // remainder F_0
  for (const Matrix& e : inner.effects()) effects.push_back(scale * (w * e * w.adjoint()));
  effects.push_back(Matrix::Zero(d, d));  // kept for stable output shape

  LiftedPovm out{Povm(std::move(effects)), alpha, beta, 0, 0};
  ClassicalDistribution p = induced_distribution(rho, out.povm);
  ClassicalDistribution q = induced_distribution(sigma, out.povm);
  out.classical_fidelity = classical_fidelity(p, q);
  out.gap = out.classical_fidelity - reference_fidelity;
  return out;
}

Povm helstrom_povm(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  SpectralDecomposition s = eig_hermitian(rho.matrix() - sigma.matrix());
  Index d = rho.dim();
  Matrix plus = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k)
    if (s.eigenvalues(k) >= 0) plus += s.eigenvectors.col(k) * s.eigenvectors.col(k).adjoint();
  Matrix minus = Matrix::Identity(d, d) - plus;
  return Povm({hermitize(plus), hermitize(minus)});
}

Povm random_povm(Index dim, Index num_effects, Rng& rng) {
  require(num_effects >= 1, ErrorCode::InvalidArgument, "need at least one effect");
  std::vector<Matrix> raw;
  Matrix sum = Matrix::Zero(dim, dim);
  for (Index i = 0; i < num_effects; ++i) {
    Matrix g = rng.ginibre(dim, dim);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  Matrix norm = pinv_sqrt(sum, 1e-14);
  std::vector<Matrix> effects;
  for (const Matrix& a : raw) effects.push_back(hermitize(norm * a * norm));
  return Povm(std::move(effects));
}

}  // namespace qfid
