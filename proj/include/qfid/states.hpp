#pragma once

#include "qfid/hermitian.hpp"
#include "qfid/matrix.hpp"
#include "qfid/random.hpp"

namespace qfid {

// Unit-trace PSD matrix. Validated on construction.
class DensityMatrix {
 public:
  // trace_tol is looser for channel outputs, where unit trace is inherited
  // from Kraus completeness only up to its own tolerance.
  explicit DensityMatrix(Matrix entries, double trace_tol = tol::trace);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

  Index rank(double rank_tol = tol::rank) const { return psd_rank(mat_, rank_tol); }

  static DensityMatrix from_pure(const Vector& amplitudes);

 private:
  Matrix mat_;
};

struct PureState {
  Vector amplitudes;  // unit Euclidean norm

  explicit PureState(Vector amps);
  Index dim() const { return amplitudes.size(); }
};

// Pure state on system x ancilla with system-major index convention:
// composite = system_index * ancilla_dim + ancilla_index.
struct Purification {
  Index system_dim = 0;
  Index ancilla_dim = 0;
  PureState state;

  Purification(Index sys, Index anc, PureState s);
};

// Canonical purification from the spectral decomposition of rho: the i-th
// support eigenvector (eigenvalues ascending) is paired with the i-th standard
// ancilla basis vector. Requires ancilla_dim >= rank(rho).
Purification purify(const DensityMatrix& rho, Index ancilla_dim);

DensityMatrix partial_trace_ancilla(const Purification& psi);

// G * G^dag / Tr(G * G^dag) with G a dim x rank seeded complex Gaussian matrix.
DensityMatrix random_density(Index dim, Index rank, Rng& rng);

PureState random_pure(Index dim, Rng& rng);

// Kronecker product under the system-major convention.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qfid
