#pragma once

#include <cstdint>
#include <random>

#include "qfid/matrix.hpp"

namespace qfid {

// Seeded random source. Sub-streams are derived from the base seed by a
// counter-based split so that parallel suites stay reproducible under a
// single --seed flag.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

  // Independent stream #index derived from this generator's seed.
  Rng split(std::uint64_t index) const { return Rng(mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)))); }

  std::uint64_t seed() const { return seed_; }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  Complex complex_normal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  // Matrix of independent standard complex Gaussian entries.
  Matrix ginibre(Index rows, Index cols) {
    Matrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) g(i, j) = complex_normal();
    return g;
  }

  // Haar-distributed unitary via QR with the R-diagonal phase fix.
  Matrix haar_unitary(Index dim) {
    Matrix g = ginibre(dim, dim);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
      Complex d = r(j, j);
      double ad = std::abs(d);
      q.col(j) *= (ad > 0) ? d / ad : Complex(1, 0);
    }
    return q;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace qfid
