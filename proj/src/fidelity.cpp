#include "qfid/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace qfid {

namespace {
double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  return clamp01(trace_norm(psd_sqrt(sigma.matrix()) * psd_sqrt(rho.matrix())));
}

double fidelity_sandwich(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  Matrix sr = psd_sqrt(rho.matrix());
  Matrix sandwich = sr * sigma.matrix() * sr;
  sandwich = (sandwich + sandwich.adjoint()) / 2.0;  // shed round-off asymmetry
  SpectralDecomposition s = eig_hermitian(sandwich);
  // Eigenvalues on an exact kernel come back as O(eps) noise whose square
  // roots would pollute the sum; floor them like psd_sqrt does.
  double lmax = std::max(s.eigenvalues.maxCoeff(), 0.0);
  double f = 0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues(i) > 1e-13 * lmax) f += std::sqrt(s.eigenvalues(i));
  return clamp01(f);
}

double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::acos(fidelity(rho, sigma));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

FidelityReport check_bounds(const DensityMatrix& rho, const DensityMatrix& sigma) {
  FidelityReport r;
  r.fidelity = fidelity(rho, sigma);
  r.bures_angle = std::acos(r.fidelity);
  r.trace_distance = trace_distance(rho, sigma);
  r.lower_bound_ok = (1.0 - r.fidelity) <= r.trace_distance + 1e-9;
  r.upper_bound_ok = r.trace_distance <= std::sqrt(std::max(0.0, 1.0 - r.fidelity * r.fidelity)) + 1e-9;
  return r;
}

std::pair<Purification, Purification> uhlmann_optimal_purifications(
    const DensityMatrix& rho, const DensityMatrix& sigma, Index ancilla_dim) {
  require_same_dim(rho.matrix(), sigma.matrix());
  Index d = rho.dim();
  require(ancilla_dim >= d, ErrorCode::AncillaTooSmall,
          "ancilla_dim must be at least the system dimension");

  Purification psi = purify(rho, ancilla_dim);

  // Ancilla ordering used by the canonical purification: support eigenvector
  // indices first (ascending), then kernel indices.
  SpectralDecomposition srho = eig_hermitian(rho.matrix());
  double lmax = srho.eigenvalues.maxCoeff();
  std::vector<Index> order;
  for (Index i = 0; i < d; ++i)
    if (srho.eigenvalues(i) > tol::rank * lmax) order.push_back(i);
  for (Index i = 0; i < d; ++i)
    if (srho.eigenvalues(i) <= tol::rank * lmax) order.push_back(i);

  Matrix v_perm(d, d);
  for (Index k = 0; k < d; ++k) v_perm.col(k) = srho.eigenvectors.col(order[k]);

  Matrix sqrt_rho = psd_sqrt(rho.matrix());
  Matrix sqrt_sigma = psd_sqrt(sigma.matrix());
  Matrix u0 = polar_unitary(sqrt_sigma, sqrt_rho);  // sqrt(sigma) sqrt(rho) = U0 |.|

  // phi = vec of [sqrt(sigma) U0 Vperm | 0], system-major.
  Matrix a_phi = sqrt_sigma * u0 * v_perm;
  Vector phi = Vector::Zero(d * ancilla_dim);
  for (Index a = 0; a < d; ++a)
    for (Index m = 0; m < d; ++m) phi(a * ancilla_dim + m) = a_phi(a, m);
  phi /= phi.norm();

  return {psi, Purification(d, ancilla_dim, PureState(phi))};
}

Complex purification_overlap(const Purification& a, const Purification& b) {
  require(a.state.dim() == b.state.dim(), ErrorCode::DimMismatch,
          "purification dimensions differ");
  return a.state.amplitudes.dot(b.state.amplitudes);
}

}  // namespace qfid
