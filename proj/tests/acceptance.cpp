// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qfid/channels.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/measurement.hpp"
#include "qfid/truncation.hpp"

using namespace qfid;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

struct PairCase {
  DensityMatrix rho;
  DensityMatrix sigma;
};

PairCase random_pair(Index dim, Rng& rng) {
  return {random_density(dim, rng.uniform_int(1, dim), rng),
          random_density(dim, rng.uniform_int(1, dim), rng)};
}

void criterion_uhlmann() {
  Rng rng(1001);
  double worst_eq = 0, worst_excess = 0;
  for (int t = 0; t < 200; ++t) {
    Index dim = rng.uniform_int(2, 16);
    PairCase c = random_pair(dim, rng);
    double f = fidelity(c.rho, c.sigma);
    auto [psi, phi] = uhlmann_optimal_purifications(c.rho, c.sigma, dim);
    worst_eq = std::max(worst_eq, std::abs(std::abs(purification_overlap(psi, phi)) - f));
    for (int u = 0; u < 20; ++u) {
      Matrix w = kron(Matrix::Identity(dim, dim), rng.haar_unitary(dim));
      Purification alt(dim, dim, PureState(w * phi.state.amplitudes));
      worst_excess = std::max(worst_excess, std::abs(purification_overlap(psi, alt)) - f);
    }
  }
  report(1, "purification overlap attains the fidelity", worst_eq <= 1e-8 && worst_excess <= 1e-8,
         "max |overlap - F| = " + std::to_string(worst_eq) +
             ", max alternative excess = " + std::to_string(worst_excess));
}

void criterion_optimal_povm() {
  Rng rng(1002);
  double worst_eq = 0;
  for (int t = 0; t < 200; ++t) {
    Index dim = rng.uniform_int(2, 12);
    PairCase c = random_pair(dim, rng);
    Povm povm = fidelity_optimal_povm(c.rho, c.sigma);
    double measured = classical_fidelity(induced_distribution(c.rho, povm),
                                         induced_distribution(c.sigma, povm));
    worst_eq = std::max(worst_eq, std::abs(measured - fidelity(c.rho, c.sigma)));
  }
  double worst_deficit = 0;
  for (int t = 0; t < 500; ++t) {
    Index dim = rng.uniform_int(2, 10);
    PairCase c = random_pair(dim, rng);
    Povm povm = random_povm(dim, rng.uniform_int(2, 8), rng);
    double measured = classical_fidelity(induced_distribution(c.rho, povm),
                                         induced_distribution(c.sigma, povm));
    worst_deficit = std::max(worst_deficit, fidelity(c.rho, c.sigma) - measured);
  }
  report(2, "optimal measurement attains the fidelity, generic ones never beat it",
         worst_eq <= 1e-7 && worst_deficit <= 1e-8,
         "max |measured - F| = " + std::to_string(worst_eq) +
             ", max deficit = " + std::to_string(worst_deficit));
}

void criterion_truncation() {
  SpectralStateGenerator g1 = SpectralStateGenerator::geometric(0.5);
  SpectralStateGenerator g2 = SpectralStateGenerator::geometric(1.0 / 3.0);
  ConvergenceReport rep = truncated_fidelity_sweep(g1, g2, {4, 8, 16, 32, 64});

  bool ok = true;
  std::string detail;
  double prev = 2;
  for (const ConvergenceRow& row : rep.rows) {
    ok = ok && row.povm_gap >= -1e-9 && row.povm_gap <= prev + 1e-9;
    prev = row.povm_gap;
    // Closed-form diagonal oracle for the truncated fidelity.
    double sum = 0;
    for (Index i = 0; i < row.trunc_dim; ++i)
      sum += std::sqrt(g1.probability(i, kDefaultCapDim) * g2.probability(i, kDefaultCapDim));
    ok = ok && std::abs(row.fidelity_n - sum / std::sqrt(row.alpha_n * row.beta_n)) <= 1e-9;
  }
  ok = ok && rep.rows.back().povm_gap < 1e-3;
  double limit = std::sqrt((1 - 0.5) * (1 - 1.0 / 3.0)) / (1 - std::sqrt(0.5 / 3.0));
  ok = ok && std::abs(rep.limit - limit) <= 1e-9;
  report(3, "truncated measurements approach the fidelity from above", ok,
         "final gap = " + std::to_string(rep.rows.back().povm_gap) +
             ", limit = " + std::to_string(rep.limit));
}

void criterion_bounds() {
  Rng rng(1004);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    Index dim = rng.uniform_int(2, 12);
    PairCase c = random_pair(dim, rng);
    FidelityReport r = check_bounds(c.rho, c.sigma);
    worst = std::max(worst, (1 - r.fidelity) - r.trace_distance);
    worst = std::max(worst,
                     r.trace_distance - std::sqrt(std::max(0.0, 1 - r.fidelity * r.fidelity)));
  }
  double worst_tight = 0;
  for (int t = 0; t < 100; ++t) {
    Index dim = rng.uniform_int(2, 10);
    DensityMatrix a = DensityMatrix::from_pure(random_pure(dim, rng).amplitudes);
    DensityMatrix b = DensityMatrix::from_pure(random_pure(dim, rng).amplitudes);
    FidelityReport r = check_bounds(a, b);
    worst_tight = std::max(
        worst_tight,
        std::abs(r.trace_distance - std::sqrt(std::max(0.0, 1 - r.fidelity * r.fidelity))));
  }
  double worst_helstrom = 0;
  for (int t = 0; t < 100; ++t) {
    Index dim = rng.uniform_int(2, 10);
    PairCase c = random_pair(dim, rng);
    Povm h = helstrom_povm(c.rho, c.sigma);
    double cd = classical_trace_distance(induced_distribution(c.rho, h),
                                         induced_distribution(c.sigma, h));
    worst_helstrom = std::max(worst_helstrom, std::abs(cd - trace_distance(c.rho, c.sigma)));
  }
  report(4, "distance bounds hold, tight for pure pairs, attained by the sign measurement",
         worst <= 1e-9 && worst_tight <= 1e-9 && worst_helstrom <= 1e-8,
         "max violation = " + std::to_string(worst) + ", max pure slack = " +
             std::to_string(worst_tight) + ", max attainment error = " +
             std::to_string(worst_helstrom));
}

void criterion_metric() {
  Rng rng(1005);
  bool ok = true;
  double worst_tri = 0;
  for (int t = 0; t < 1000; ++t) {
    Index dim = rng.uniform_int(2, 8);
    DensityMatrix a = random_density(dim, dim, rng);
    DensityMatrix b = random_density(dim, dim, rng);
    DensityMatrix c = random_density(dim, dim, rng);
    ok = ok && std::abs(bures_angle(a, b) - bures_angle(b, a)) <= 1e-9;
    worst_tri = std::max(worst_tri, bures_angle(a, c) - bures_angle(a, b) - bures_angle(b, c));
    if (fidelity(a, b) > 1 - 1e-10) ok = ok && (a.matrix() - b.matrix()).norm() < 1e-6;
    ok = ok && fidelity(a, DensityMatrix(a.matrix())) > 1 - 1e-10;
  }
  report(5, "the angle is a metric", ok && worst_tri <= 1e-9,
         "max triangle violation = " + std::to_string(worst_tri));
}

void criterion_channels() {
  Rng rng(1006);
  double worst_io = 0, worst_neg = 0, worst_fd = 0, worst_ens = 0, worst_remix = 0,
         worst_routes = 0;
  for (int t = 0; t < 500; ++t) {
    Index dim = rng.uniform_int(2, 6);
    Index k = rng.uniform_int(1, 4);
    DensityMatrix rho = random_density(dim, rng.uniform_int(1, dim), rng);
    KrausChannel ch = random_channel(dim, k, rng);

    double ef = entanglement_fidelity(rho, ch);
    double io = fidelity(rho, apply_channel(ch, rho));
    worst_io = std::max(worst_io, ef - io * io);
    worst_routes = std::max(worst_routes, std::abs(ef - entanglement_fidelity_purified(rho, ch)));

    DensityMatrix rho2 = random_density(dim, dim, rng);
    double f2 = convexity_second_derivative(rho, rho2, ch);
    worst_neg = std::max(worst_neg, -f2);
    auto at = [&](double x) {
      Matrix m = x * rho.matrix() + (1 - x) * rho2.matrix();
      return entanglement_fidelity(DensityMatrix(m), ch);
    };
    double h = 1e-4;
    double fd = (at(0.5 + h) - 2 * at(0.5) + at(0.5 - h)) / (h * h);
    worst_fd = std::max(worst_fd, std::abs(fd - f2) / std::max(1.0, std::abs(f2)));

    Index terms = rng.uniform_int(2, 6);
    RealVector w(terms);
    std::vector<DensityMatrix> states;
    for (Index i = 0; i < terms; ++i) {
      w(i) = rng.uniform() + 1e-3;
      states.push_back(random_density(dim, dim, rng));
    }
    w /= w.sum();
    Matrix avg = Matrix::Zero(dim, dim);
    for (Index i = 0; i < terms; ++i) avg += w(i) * states[i].matrix();
    double mixture = entanglement_fidelity(DensityMatrix(avg), ch);
    worst_ens = std::max(worst_ens, mixture - ensemble_average_fidelity(Ensemble(w, states), ch));
    double weighted = 0;
    for (Index i = 0; i < terms; ++i) weighted += w(i) * entanglement_fidelity(states[i], ch);
    worst_ens = std::max(worst_ens, mixture - weighted);

    if (k >= 2) {
      Matrix u = rng.haar_unitary(k);
      std::vector<Matrix> remixed(k, Matrix::Zero(dim, dim));
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) remixed[i] += u(i, j) * ch.kraus_ops()[j];
      worst_remix =
          std::max(worst_remix, std::abs(entanglement_fidelity(rho, KrausChannel(remixed)) - ef));
    }
  }
  bool ok = worst_io <= 1e-8 && worst_neg <= 1e-12 && worst_fd <= 1e-5 && worst_ens <= 1e-8 &&
            worst_remix <= 1e-9 && worst_routes <= 1e-8;
  report(6, "channel fidelity inequalities and representation independence", ok,
         "io = " + std::to_string(worst_io) + ", f'' = -" + std::to_string(worst_neg) +
             ", fd rel = " + std::to_string(worst_fd) + ", ensemble = " +
             std::to_string(worst_ens) + ", remix = " + std::to_string(worst_remix) +
             ", routes = " + std::to_string(worst_routes));
}

void criterion_monotonicity_concavity() {
  Rng rng(1007);
  double worst_mono = 0, worst_concave = 0;
  for (int t = 0; t < 500; ++t) {
    Index dim = rng.uniform_int(2, 6);
    PairCase c = random_pair(dim, rng);
    KrausChannel ch = random_channel(dim, rng.uniform_int(1, 4), rng);
    worst_mono = std::max(worst_mono,
                          fidelity(c.rho, c.sigma) -
                              fidelity(apply_channel(ch, c.rho), apply_channel(ch, c.sigma)));

    Index k = rng.uniform_int(2, 5);
    RealVector p(k), q(k);
    std::vector<DensityMatrix> rhos, sigmas;
    for (Index i = 0; i < k; ++i) {
      p(i) = rng.uniform() + 1e-3;
      q(i) = rng.uniform() + 1e-3;
      rhos.push_back(random_density(dim, dim, rng));
      sigmas.push_back(random_density(dim, dim, rng));
    }
    p /= p.sum();
    q /= q.sum();
    Matrix mr = Matrix::Zero(dim, dim), ms = Matrix::Zero(dim, dim);
    double rhs = 0;
    for (Index i = 0; i < k; ++i) {
      mr += p(i) * rhos[i].matrix();
      ms += q(i) * sigmas[i].matrix();
      rhs += std::sqrt(p(i) * q(i)) * fidelity(rhos[i], sigmas[i]);
    }
    worst_concave =
        std::max(worst_concave, rhs - fidelity(DensityMatrix(mr), DensityMatrix(ms)));
  }
  report(7, "fidelity is monotone under channels and strongly concave",
         worst_mono <= 1e-8 && worst_concave <= 1e-8,
         "max monotonicity violation = " + std::to_string(worst_mono) +
             ", max concavity violation = " + std::to_string(worst_concave));
}

void criterion_polar_attainment() {
  Rng rng(1008);
  double worst_eq = 0, worst_excess = 0;
  for (int t = 0; t < 200; ++t) {
    Index dim = rng.uniform_int(2, 10);
    Matrix ga = rng.ginibre(dim, dim), gb = rng.ginibre(dim, dim);
    Matrix a = ga * ga.adjoint() / double(dim);
    Matrix b = gb * gb.adjoint() / double(dim);
    Matrix ab = a * b;
    double tn = trace_norm(ab);
    Matrix v = polar_unitary(a, b);
    worst_eq = std::max(worst_eq, std::abs((ab * v.adjoint()).trace().real() - tn));
    for (int u = 0; u < 50; ++u)
      worst_excess =
          std::max(worst_excess, std::abs((ab * rng.haar_unitary(dim).adjoint()).trace()) - tn);
  }
  report(8, "the polar factor attains the trace norm", worst_eq <= 1e-8 && worst_excess <= 1e-8,
         "max |attained - norm| = " + std::to_string(worst_eq) +
             ", max unitary excess = " + std::to_string(worst_excess));
}

}  // namespace

int main() {
  criterion_uhlmann();
  criterion_optimal_povm();
  criterion_truncation();
  criterion_bounds();
  criterion_metric();
  criterion_channels();
  criterion_monotonicity_concavity();
  criterion_polar_attainment();
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", g_failures);
  return g_failures;
}
