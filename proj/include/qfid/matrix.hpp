#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qfid {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default tolerances. These are part of the test contract; callers that need
// different ones pass them explicitly.
namespace tol {
inline constexpr double herm = 1e-10;   // Hermiticity, max abs entry
inline constexpr double recon = 1e-9;   // reconstruction, relative Frobenius
inline constexpr double psd = 1e-10;    // eigenvalue clipping floor
inline constexpr double rank = 1e-8;    // support detection, relative to lambda_max
inline constexpr double povm = 1e-8;    // POVM completeness, max abs entry
inline constexpr double trace = 1e-10;  // unit-trace check
}  // namespace tol

enum class ErrorCode {
  NotHermitian,
  NotPsd,
  DimMismatch,
  AncillaTooSmall,
  InvalidPovm,
  InvalidChannel,
  InvalidTruncation,
  InvalidArgument,
  NoConvergence,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Tr(A*B) in O(n^2) without forming the product.
inline Complex trace_product(const Matrix& a, const Matrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

// Relative Frobenius distance, with an absolute fallback near zero scale.
inline double rel_frobenius(const Matrix& a, const Matrix& b) {
  double scale = std::max(a.norm(), b.norm());
  double d = (a - b).norm();
  return scale > 1.0 ? d / scale : d;
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

inline void require_same_dim(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimMismatch,
          "operand dimensions differ: " + std::to_string(a.rows()) + " vs " +
              std::to_string(b.rows()));
}

}  // namespace qfid
