#pragma once

#include <string>
#include <vector>

#include "qfid/states.hpp"

namespace qfid {

// Trace-preserving Kraus-form channel: sum E_i^dag E_i = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus_ops);

  Index dim() const { return ops_.front().rows(); }
  Index size() const { return static_cast<Index>(ops_.size()); }
  const std::vector<Matrix>& kraus_ops() const { return ops_; }

 private:
  std::vector<Matrix> ops_;
};

struct Ensemble {
  RealVector weights;                 // nonnegative, sums to 1
  std::vector<DensityMatrix> states;  // equal dims

  Ensemble(RealVector w, std::vector<DensityMatrix> s);
};

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// sum_i |Tr(E_i rho)|^2.
double entanglement_fidelity(const DensityMatrix& rho, const KrausChannel& ch);

// Same quantity through the canonical purification and the channel acting on
// the system leg; independent route used as a cross-check.
double entanglement_fidelity_purified(const DensityMatrix& rho, const KrausChannel& ch);

// sum_j p_j F(rho_j, ch(rho_j))^2.
double ensemble_average_fidelity(const Ensemble& ens, const KrausChannel& ch);

// Closed-form second derivative of x -> entanglement_fidelity(x rho1 + (1-x) rho2):
// 2 sum_i |Tr((rho1 - rho2) E_i)|^2, always nonnegative.
double convexity_second_derivative(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                   const KrausChannel& ch);

KrausChannel identity_channel(Index dim);
// {sqrt(1-p) I, sqrt(p) Z} with Z the diagonal clock unitary (the Pauli Z at dim 2).
KrausChannel dephasing_channel(Index dim, double p);
// (1-p) rho + p I/dim via the Heisenberg-Weyl operator set.
KrausChannel depolarizing_channel(Index dim, double p);
// Qubit amplitude damping with decay gamma.
KrausChannel amplitude_damping_channel(double gamma);

// "identity:d", "dephasing:p[:d]", "depolarizing:p[:d]", "amplitude-damping:g".
KrausChannel parse_channel_spec(const std::string& spec);

// Slices a Haar-random isometry from dim to dim*num_kraus into Kraus blocks.
KrausChannel random_channel(Index dim, Index num_kraus, Rng& rng);

}  // namespace qfid
