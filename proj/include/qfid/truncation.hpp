#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfid/states.hpp"

namespace qfid {

inline constexpr Index kDefaultCapDim = 1024;

// Diagonal state over a countable basis, given by a probability sequence.
// An optional basis rotation is applied after truncation so the truncated
// masses keep their meaning; it either comes as an explicit unitary (valid at
// one dimension only) or as a seed for a per-dimension Haar unitary.
struct SpectralStateGenerator {
  enum class Kind { Geometric, Power, Custom };

  Kind kind = Kind::Geometric;
  double lambda = 0.5;             // geometric: p_i = (1 - lambda) lambda^i
  double s = 2.0;                  // power: p_i proportional to (i+1)^-s
  std::vector<double> weights;     // custom list, normalized by its sum
  std::optional<Matrix> rotation;  // fixed unitary
  std::optional<std::uint64_t> rotation_seed;

  static SpectralStateGenerator geometric(double lambda);
  static SpectralStateGenerator power(double s);
  static SpectralStateGenerator custom(std::vector<double> weights);

  SpectralStateGenerator rotated(Matrix u) const;
  SpectralStateGenerator rotated(std::uint64_t seed) const;

  bool is_diagonal() const { return !rotation && !rotation_seed; }

  // Probability of index i under the normalization convention: exact for
  // geometric, partial-sum-to-cap normalizer for power, list sum for custom.
  double probability(Index i, Index cap) const;

  // Mass of the first n indices.
  double partial_mass(Index n, Index cap) const;
};

// "geometric:0.5", "power:2.0", "custom:0.25,0.75", optional ":rot=<seed>".
SpectralStateGenerator parse_generator_spec(const std::string& spec);

// Diagonal matrix of the first dim entries renormalized by the truncated mass,
// then rotated if a rotation is configured.
DensityMatrix materialize(const SpectralStateGenerator& gen, Index dim,
                          Index cap = kDefaultCapDim);

// Reference fidelity of the untruncated pair: closed form (geometric series /
// finite sums) for commuting diagonal pairs, cap-dimension numeric otherwise.
double limit_fidelity(const SpectralStateGenerator& g1, const SpectralStateGenerator& g2,
                      Index cap = kDefaultCapDim);

struct ConvergenceRow {
  Index trunc_dim = 0;
  double alpha_n = 0;
  double beta_n = 0;
  double fidelity_n = 0;
  double gap_to_limit = 0;
  double povm_gap = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double limit = 0;

  std::string to_csv() const;
};

// For each dim: fidelity of the materialized truncations, gap to the reference
// limit, and the lifted-POVM classical-fidelity gap computed on the pair
// embedded at the largest requested dim.
ConvergenceReport truncated_fidelity_sweep(const SpectralStateGenerator& g1,
                                           const SpectralStateGenerator& g2,
                                           const std::vector<Index>& dims,
                                           Index cap = kDefaultCapDim);

// Smallest dim in a doubling search whose lifted-POVM classical fidelity
// exceeds the reference fidelity by less than eps. Throws NoConvergence past cap.
Index epsilon_schedule(const SpectralStateGenerator& g1, const SpectralStateGenerator& g2,
                       double eps, Index cap = kDefaultCapDim);

}  // namespace qfid
