#pragma once

#include <vector>

#include "qfid/states.hpp"

namespace qfid {

// Finite list of PSD effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> effects);

  Index dim() const { return effects_.front().rows(); }
  Index size() const { return static_cast<Index>(effects_.size()); }
  const std::vector<Matrix>& effects() const { return effects_; }
  const Matrix& effect(Index m) const { return effects_[m]; }

 private:
  std::vector<Matrix> effects_;
};

struct ClassicalDistribution {
  RealVector probabilities;

  Index size() const { return probabilities.size(); }
};

// p_m = Tr(state * E_m), clamped at 0 and renormalized within tolerance.
ClassicalDistribution induced_distribution(const DensityMatrix& state, const Povm& povm);

// Bhattacharyya coefficient sum sqrt(p_m q_m).
double classical_fidelity(const ClassicalDistribution& p, const ClassicalDistribution& q);

// Half the l1 distance.
double classical_trace_distance(const ClassicalDistribution& p, const ClassicalDistribution& q);

struct MOperator {
  Matrix matrix;
  bool is_diagonalizable = true;  // always, in finite dimension
  Matrix support_projector;       // support of rho
};

// M = pinv_sqrt(rho) sqrt(sqrt(rho) sigma sqrt(rho)) pinv_sqrt(rho).
MOperator m_operator(const DensityMatrix& rho, const DensityMatrix& sigma);

// Rank-1 projectors onto an eigenbasis of M; the induced distributions attain
// the quantum fidelity as their classical fidelity.
Povm fidelity_optimal_povm(const DensityMatrix& rho, const DensityMatrix& sigma);

struct LiftedPovm {
  Povm povm;                   // effect 0 is the remainder I - sqrt(alpha beta) P
  double alpha = 0;            // Tr(P rho P)
  double beta = 0;             // Tr(P sigma P)
  double classical_fidelity = 0;
  double gap = 0;              // classical_fidelity - fidelity(rho, sigma), >= 0
};

// Truncates to the top trunc_dim eigenvectors of rho (descending eigenvalues),
// solves the truncated problem with fidelity_optimal_povm, and lifts the
// result back to the full space; the remainder effect restores completeness
// exactly. A trailing zero effect is retained for shape stability.
LiftedPovm lifted_truncation_povm(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  Index trunc_dim);

// Same, against a precomputed reference fidelity (saves recomputation in sweeps).
LiftedPovm lifted_truncation_povm(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  Index trunc_dim, double reference_fidelity);

// Two projective effects onto the nonnegative and negative eigenspaces of
// rho - sigma; attains the trace distance as classical trace distance.
Povm helstrom_povm(const DensityMatrix& rho, const DensityMatrix& sigma);

// k random PSD matrices normalized by the symmetric inverse square root of
// their sum.
Povm random_povm(Index dim, Index num_effects, Rng& rng);

}  // namespace qfid
