#include "qfid/channels.hpp"

#include <cmath>

#include "qfid/fidelity.hpp"

namespace qfid {

namespace {
Matrix hermitize(const Matrix& a) { return (a + a.adjoint()) / 2.0; }

constexpr double kPi = 3.14159265358979323846;

Matrix clock_unitary(Index d) {
  Matrix z = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) z(k, k) = std::polar(1.0, 2.0 * kPi * double(k) / double(d));
  return z;
}

Matrix shift_unitary(Index d) {
  Matrix x = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}
}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops) : ops_(std::move(kraus_ops)) {
  require(!ops_.empty(), ErrorCode::InvalidChannel, "channel has no Kraus operators");
  Index d = ops_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : ops_) {
    require(e.rows() == d && e.cols() == d, ErrorCode::DimMismatch,
            "Kraus operators have mixed dimensions");
    sum += e.adjoint() * e;
  }
  double dev = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  require(dev <= tol::povm, ErrorCode::InvalidChannel,
          "Kraus completeness fails: max deviation " + std::to_string(dev));
}

Ensemble::Ensemble(RealVector w, std::vector<DensityMatrix> s)
    : weights(std::move(w)), states(std::move(s)) {
  require(weights.size() == static_cast<Index>(states.size()), ErrorCode::DimMismatch,
          "ensemble weight/state count mismatch");
  require(weights.size() > 0, ErrorCode::InvalidArgument, "empty ensemble");
  require(weights.minCoeff() >= 0, ErrorCode::InvalidArgument, "negative ensemble weight");
  require(std::abs(weights.sum() - 1.0) <= 1e-8, ErrorCode::InvalidArgument,
          "ensemble weights sum to " + std::to_string(weights.sum()));
  for (const DensityMatrix& st : states)
    require(st.dim() == states.front().dim(), ErrorCode::DimMismatch,
            "ensemble states have mixed dimensions");
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  require(ch.dim() == rho.dim(), ErrorCode::DimMismatch, "channel/state dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& e : ch.kraus_ops()) out += e * rho.matrix() * e.adjoint();
  return DensityMatrix(hermitize(out), 1e-8);
}

double entanglement_fidelity(const DensityMatrix& rho, const KrausChannel& ch) {
  require(ch.dim() == rho.dim(), ErrorCode::DimMismatch, "channel/state dimension mismatch");
  double f = 0;
  for (const Matrix& e : ch.kraus_ops()) f += std::norm(trace_product(e, rho.matrix()));
  return std::clamp(f, 0.0, 1.0);
}

double entanglement_fidelity_purified(const DensityMatrix& rho, const KrausChannel& ch) {
  require(ch.dim() == rho.dim(), ErrorCode::DimMismatch, "channel/state dimension mismatch");
  Index d = rho.dim();
  Purification psi = purify(rho, d);
  const Vector& v = psi.state.amplitudes;
  Matrix eye = Matrix::Identity(d, d);
  Matrix evolved = Matrix::Zero(d * d, d * d);
  for (const Matrix& e : ch.kraus_ops()) {
    Vector w = kron(e, eye) * v;
    evolved += w * w.adjoint();
  }
  double f = (v.adjoint() * evolved * v)(0, 0).real();
  return std::clamp(f, 0.0, 1.0);
}

double ensemble_average_fidelity(const Ensemble& ens, const KrausChannel& ch) {
  double sum = 0;
  for (Index j = 0; j < ens.weights.size(); ++j) {
    double f = fidelity(ens.states[static_cast<std::size_t>(j)],
                        apply_channel(ch, ens.states[static_cast<std::size_t>(j)]));
    sum += ens.weights(j) * f * f;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double convexity_second_derivative(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                   const KrausChannel& ch) {
  require_same_dim(rho1.matrix(), rho2.matrix());
  require(ch.dim() == rho1.dim(), ErrorCode::DimMismatch, "channel/state dimension mismatch");
  Matrix diff = rho1.matrix() - rho2.matrix();
  // Each |Tr(E_i (x diff + rho2))|^2 term contributes twice its quadratic
  // coefficient to the second derivative.
  double f = 0;
  for (const Matrix& e : ch.kraus_ops()) f += 2 * std::norm(trace_product(e, diff));
  return f;
}

KrausChannel identity_channel(Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel dephasing_channel(Index dim, double p) {
  require(p >= 0 && p <= 1, ErrorCode::InvalidArgument, "dephasing probability out of [0,1]");
  Matrix eye = Matrix::Identity(dim, dim);
  return KrausChannel({std::sqrt(1.0 - p) * eye, std::sqrt(p) * clock_unitary(dim)});
}

KrausChannel depolarizing_channel(Index dim, double p) {
  require(p >= 0 && p <= 1, ErrorCode::InvalidArgument, "depolarizing probability out of [0,1]");
  Matrix x = shift_unitary(dim), z = clock_unitary(dim);
  double d2 = double(dim) * double(dim);
  std::vector<Matrix> ops;
  Matrix xj = Matrix::Identity(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    Matrix w = xj;
    for (Index k = 0; k < dim; ++k) {
      double coeff = (j == 0 && k == 0) ? std::sqrt(1.0 - p + p / d2) : std::sqrt(p / d2);
      ops.push_back(coeff * w);
      w = w * z;
    }
    xj = x * xj;
  }
  return KrausChannel(std::move(ops));
}

KrausChannel amplitude_damping_channel(double gamma) {
  require(gamma >= 0 && gamma <= 1, ErrorCode::InvalidArgument, "damping rate out of [0,1]");
  Matrix e0 = Matrix::Zero(2, 2), e1 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(0, 1) = std::sqrt(gamma);
  return KrausChannel({e0, e1});
}

KrausChannel parse_channel_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t next = spec.find(':', pos);
    if (next == std::string::npos) next = spec.size();
    parts.push_back(spec.substr(pos, next - pos));
    pos = next + 1;
  }
  auto num = [&](std::size_t i, double dflt, bool required) -> double {
    if (parts.size() <= i || parts[i].empty()) {
      require(!required, ErrorCode::ParseError, "channel spec '" + spec + "' needs a parameter");
      return dflt;
    }
    try {
      return std::stod(parts[i]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad number in channel spec '" + spec + "'");
    }
  };
  const std::string& name = parts[0];
  if (name == "identity") return identity_channel(static_cast<Index>(num(1, 2, false)));
  if (name == "dephasing")
    return dephasing_channel(static_cast<Index>(num(2, 2, false)), num(1, 0, true));
  if (name == "depolarizing")
    return depolarizing_channel(static_cast<Index>(num(2, 2, false)), num(1, 0, true));
  if (name == "amplitude-damping") return amplitude_damping_channel(num(1, 0, true));
  throw Error(ErrorCode::ParseError, "unknown channel '" + name + "'");
}

KrausChannel random_channel(Index dim, Index num_kraus, Rng& rng) {
  require(num_kraus >= 1, ErrorCode::InvalidArgument, "need at least one Kraus operator");
  Matrix g = rng.ginibre(dim * num_kraus, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = Matrix(qr.householderQ()).leftCols(dim);  // isometry, Q^dag Q = I
  std::vector<Matrix> ops;
  for (Index i = 0; i < num_kraus; ++i) ops.push_back(q.middleRows(i * dim, dim));
  return KrausChannel(std::move(ops));
}

}  // namespace qfid
