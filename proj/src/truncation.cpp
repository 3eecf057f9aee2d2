#include "qfid/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qfid/fidelity.hpp"
#include "qfid/measurement.hpp"

namespace qfid {

SpectralStateGenerator SpectralStateGenerator::geometric(double lambda) {
  require(lambda > 0 && lambda < 1, ErrorCode::InvalidArgument,
          "geometric ratio must lie in (0,1)");
  SpectralStateGenerator g;
  g.kind = Kind::Geometric;
  g.lambda = lambda;
  return g;
}

SpectralStateGenerator SpectralStateGenerator::power(double s) {
  require(s > 1, ErrorCode::InvalidArgument, "power exponent must exceed 1");
  SpectralStateGenerator g;
  g.kind = Kind::Power;
  g.s = s;
  return g;
}

SpectralStateGenerator SpectralStateGenerator::custom(std::vector<double> weights) {
  require(!weights.empty(), ErrorCode::InvalidArgument, "custom sequence is empty");
  double sum = 0;
  for (double w : weights) {
    require(w >= 0, ErrorCode::InvalidArgument, "custom sequence has a negative entry");
    sum += w;
  }
  require(sum > 0, ErrorCode::InvalidArgument, "custom sequence has zero mass");
  for (double& w : weights) w /= sum;
  SpectralStateGenerator g;
  g.kind = Kind::Custom;
  g.weights = std::move(weights);
  return g;
}

SpectralStateGenerator SpectralStateGenerator::rotated(Matrix u) const {
  SpectralStateGenerator g = *this;
  g.rotation = std::move(u);
  g.rotation_seed.reset();
  return g;
}

SpectralStateGenerator SpectralStateGenerator::rotated(std::uint64_t seed) const {
  SpectralStateGenerator g = *this;
  g.rotation_seed = seed;
  g.rotation.reset();
  return g;
}

double SpectralStateGenerator::probability(Index i, Index cap) const {
  switch (kind) {
    case Kind::Geometric:
      return (1.0 - lambda) * std::pow(lambda, double(i));
    case Kind::Power: {
      double norm = 0;
      for (Index k = 0; k < cap; ++k) norm += std::pow(double(k + 1), -s);
      return std::pow(double(i + 1), -s) / norm;
    }
    case Kind::Custom:
      return i < static_cast<Index>(weights.size()) ? weights[static_cast<std::size_t>(i)] : 0.0;
  }
  return 0.0;
}

double SpectralStateGenerator::partial_mass(Index n, Index cap) const {
  if (kind == Kind::Geometric) return 1.0 - std::pow(lambda, double(n));
  double m = 0;
  for (Index i = 0; i < n; ++i) m += probability(i, cap);
  return std::min(m, 1.0);
}

SpectralStateGenerator parse_generator_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t next = spec.find(':', pos);
    if (next == std::string::npos) next = spec.size();
    parts.push_back(spec.substr(pos, next - pos));
    pos = next + 1;
  }
  require(parts.size() >= 2, ErrorCode::ParseError,
          "generator spec '" + spec + "' needs a parameter");
  SpectralStateGenerator g;
  try {
    if (parts[0] == "geometric") {
      g = SpectralStateGenerator::geometric(std::stod(parts[1]));
    } else if (parts[0] == "power") {
      g = SpectralStateGenerator::power(std::stod(parts[1]));
    } else if (parts[0] == "custom") {
      std::vector<double> w;
      std::size_t p = 0;
      const std::string& list = parts[1];
      while (p <= list.size()) {
        std::size_t c = list.find(',', p);
        if (c == std::string::npos) c = list.size();
        w.push_back(std::stod(list.substr(p, c - p)));
        p = c + 1;
      }
      g = SpectralStateGenerator::custom(std::move(w));
    } else {
      throw Error(ErrorCode::ParseError, "unknown generator '" + parts[0] + "'");
    }
    for (std::size_t i = 2; i < parts.size(); ++i) {
      if (parts[i].rfind("rot=", 0) == 0)
        g = g.rotated(static_cast<std::uint64_t>(std::stoull(parts[i].substr(4))));
      else
        throw Error(ErrorCode::ParseError, "unknown generator option '" + parts[i] + "'");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number in generator spec '" + spec + "'");
  }
  return g;
}

DensityMatrix materialize(const SpectralStateGenerator& gen, Index dim, Index cap) {
  require(dim >= 1, ErrorCode::InvalidArgument, "dim must be positive");
  RealVector p(dim);
  for (Index i = 0; i < dim; ++i) p(i) = gen.probability(i, cap);
  double mass = p.sum();
  require(mass > 1e-12, ErrorCode::InvalidTruncation, "truncated mass vanishes");
  p /= mass;

  Matrix m = Matrix::Zero(dim, dim);
  m.diagonal() = p.cast<Complex>();
  if (gen.rotation) {
    require(gen.rotation->rows() == dim && gen.rotation->cols() == dim, ErrorCode::DimMismatch,
            "basis rotation dimension does not match materialized dim");
    m = (*gen.rotation) * m * gen.rotation->adjoint();
  } else if (gen.rotation_seed) {
    Matrix u = Rng(*gen.rotation_seed).split(static_cast<std::uint64_t>(dim)).haar_unitary(dim);
    m = u * m * u.adjoint();
  }
  return DensityMatrix((m + m.adjoint()) / 2.0, 1e-8);
}

double limit_fidelity(const SpectralStateGenerator& g1, const SpectralStateGenerator& g2,
                      Index cap) {
  if (g1.is_diagonal() && g2.is_diagonal()) {
    if (g1.kind == SpectralStateGenerator::Kind::Geometric &&
        g2.kind == SpectralStateGenerator::Kind::Geometric) {
      // sum_i sqrt(p_i q_i) is itself a geometric series.
      double r = std::sqrt(g1.lambda * g2.lambda);
      return std::sqrt((1.0 - g1.lambda) * (1.0 - g2.lambda)) / (1.0 - r);
    }
    double f = 0;
    for (Index i = 0; i < cap; ++i)
      f += std::sqrt(g1.probability(i, cap) * g2.probability(i, cap));
    return std::min(f, 1.0);
  }
  return fidelity(materialize(g1, cap, cap), materialize(g2, cap, cap));
}

std::string ConvergenceReport::to_csv() const {
  std::string out = "trunc_dim,alpha_n,beta_n,fidelity_n,gap_to_limit,povm_gap\n";
  char buf[256];
  for (const ConvergenceRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  static_cast<long long>(r.trunc_dim), r.alpha_n, r.beta_n, r.fidelity_n,
                  r.gap_to_limit, r.povm_gap);
    out += buf;
  }
  return out;
}

ConvergenceReport truncated_fidelity_sweep(const SpectralStateGenerator& g1,
                                           const SpectralStateGenerator& g2,
                                           const std::vector<Index>& dims, Index cap) {
  require(!dims.empty(), ErrorCode::InvalidArgument, "no dims given");
  require(std::is_sorted(dims.begin(), dims.end()), ErrorCode::InvalidArgument,
          "dims must be ascending");

  ConvergenceReport report;
  report.limit = limit_fidelity(g1, g2, cap);

  Index ambient = dims.back();
  DensityMatrix rho_ref = materialize(g1, ambient, cap);
  DensityMatrix sigma_ref = materialize(g2, ambient, cap);
  double f_ref = fidelity(rho_ref, sigma_ref);

  for (Index n : dims) {
    ConvergenceRow row;
    row.trunc_dim = n;
    row.alpha_n = g1.partial_mass(n, cap);
    row.beta_n = g2.partial_mass(n, cap);
    row.fidelity_n = fidelity(materialize(g1, n, cap), materialize(g2, n, cap));
    row.gap_to_limit = std::abs(report.limit - row.fidelity_n);
    row.povm_gap = lifted_truncation_povm(rho_ref, sigma_ref, n, f_ref).gap;
    report.rows.push_back(row);
  }
  return report;
}

Index epsilon_schedule(const SpectralStateGenerator& g1, const SpectralStateGenerator& g2,
                       double eps, Index cap) {
  require(eps > 0, ErrorCode::InvalidArgument, "eps must be positive");
  double f_ref = limit_fidelity(g1, g2, cap);
  DensityMatrix rho = materialize(g1, cap, cap);
  DensityMatrix sigma = materialize(g2, cap, cap);
  for (Index n = 1; n <= cap; n *= 2) {
    if (lifted_truncation_povm(rho, sigma, n, f_ref).gap < eps) return n;
  }
  throw Error(ErrorCode::NoConvergence,
              "no truncation dim up to " + std::to_string(cap) + " meets eps");
}

}  // namespace qfid
