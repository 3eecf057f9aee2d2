#include "qfid/suites.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "qfid/channels.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/measurement.hpp"
#include "qfid/truncation.hpp"

namespace qfid {

namespace {

struct Check {
  SuiteResult* result;

  void operator()(bool ok, const std::string& detail) {
    if (ok) return;
    ++result->failures;
    if (result->messages.size() < 5) result->messages.push_back(detail);
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

DensityMatrix random_state(Index dim, Rng& rng) {
  Index rank = rng.uniform_int(1, dim);
  return random_density(dim, rank, rng);
}

Ensemble random_ensemble(Index dim, Index count, Rng& rng) {
  RealVector w(count);
  for (Index i = 0; i < count; ++i) w(i) = -std::log(rng.uniform() + 1e-300);
  w /= w.sum();
  std::vector<DensityMatrix> states;
  for (Index i = 0; i < count; ++i) states.push_back(random_state(dim, rng));
  return Ensemble(w, std::move(states));
}

// ---- individual suites ------------------------------------------------------

void suite_trace_norm_attainment(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    Matrix ga = local.ginibre(dim, dim), gb = local.ginibre(dim, dim);
    Matrix a = (ga * ga.adjoint()) / double(dim);
    Matrix b = (gb * gb.adjoint()) / double(dim);
    Matrix v = polar_unitary(a, b);
    double tn = trace_norm(a * b);
    Complex attained = (a * b * v.adjoint()).trace();
    check(std::abs(attained.imag()) <= 1e-8,
          "polar attainment trace not real: imag=" + fmt(attained.imag()));
    check(std::abs(attained.real() - tn) <= 1e-8,
          "polar attainment misses trace norm: " + fmt(attained.real()) + " vs " + fmt(tn));
    for (int u = 0; u < 50; ++u) {
      Matrix uu = local.haar_unitary(dim);
      double val = std::abs((a * b * uu).trace());
      check(val <= tn + 1e-8, "trace norm not dominant: |Tr(ABU)|=" + fmt(val) +
                                  " > " + fmt(tn));
    }
  }
}

void suite_uhlmann(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    double f = fidelity(rho, sigma);
    auto [psi, phi] = uhlmann_optimal_purifications(rho, sigma, dim);
    double overlap = std::abs(purification_overlap(psi, phi));
    check(std::abs(overlap - f) <= 1e-8,
          "optimal purification overlap " + fmt(overlap) + " != fidelity " + fmt(f));
    // Ancilla unitaries generate alternative purifications; none may beat the
    // fidelity.
    for (int k = 0; k < 20; ++k) {
      Matrix ua = local.haar_unitary(dim), ub = local.haar_unitary(dim);
      Vector va = kron(Matrix::Identity(dim, dim), ua) * psi.state.amplitudes;
      Vector vb = kron(Matrix::Identity(dim, dim), ub) * phi.state.amplitudes;
      double alt = std::abs(va.dot(vb));
      check(alt <= f + 1e-8,
            "alternative purification overlap " + fmt(alt) + " exceeds fidelity " + fmt(f));
    }
  }
}

void suite_fidelity_basic(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    double f = fidelity(rho, sigma);
    check(std::abs(f - fidelity(sigma, rho)) <= 1e-9, "fidelity is not symmetric");
    check(std::abs(f - fidelity_sandwich(rho, sigma)) <= 1e-8,
          "trace-norm and nested-root fidelity routes disagree");
    Matrix u = local.haar_unitary(dim);
    DensityMatrix rho_u(u * rho.matrix() * u.adjoint(), 1e-8);
    DensityMatrix sigma_u(u * sigma.matrix() * u.adjoint(), 1e-8);
    check(std::abs(f - fidelity(rho_u, sigma_u)) <= 1e-9, "fidelity is not unitarily invariant");
    check(std::abs(fidelity(rho, rho) - 1.0) <= 1e-9, "self-fidelity differs from 1");
    // Identity of indiscernibles, forward direction, on a near-equal pair.
    Matrix tiny = local.ginibre(dim, dim);
    tiny = 1e-13 * (tiny + tiny.adjoint());
    tiny -= (tiny.trace().real() / double(dim)) * Matrix::Identity(dim, dim);
    DensityMatrix close(rho.matrix() + tiny, 1e-8);
    double fc = fidelity(rho, close);
    if (fc > 1.0 - 1e-10)
      check((rho.matrix() - close.matrix()).norm() < 1e-6,
            "fidelity ~1 but states differ in Frobenius norm");
    check(fidelity(rho, close) > 1.0 - 1e-10, "equal states do not reach fidelity 1");
  }
}

void suite_bures_triangle(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix a = random_state(dim, local);
    DensityMatrix b = random_state(dim, local);
    DensityMatrix c = random_state(dim, local);
    double ab = bures_angle(a, b), bc = bures_angle(b, c), ac = bures_angle(a, c);
    check(ac <= ab + bc + 1e-9, "triangle inequality fails: " + fmt(ac) + " > " +
                                    fmt(ab) + " + " + fmt(bc));
  }
}

void suite_fvdg_bounds(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    FidelityReport rep = check_bounds(rho, sigma);
    check(rep.lower_bound_ok, "lower bound 1-F <= D fails");
    check(rep.upper_bound_ok, "upper bound D <= sqrt(1-F^2) fails");

    // Pure-pure pairs make the upper bound tight.
    DensityMatrix pa = DensityMatrix::from_pure(random_pure(dim, local).amplitudes);
    DensityMatrix pb = DensityMatrix::from_pure(random_pure(dim, local).amplitudes);
    double f = fidelity(pa, pb), d = trace_distance(pa, pb);
    check(std::abs(d - std::sqrt(std::max(0.0, 1.0 - f * f))) <= 1e-9,
          "pure-pure upper bound is not tight: D=" + fmt(d) + ", F=" + fmt(f));

    // Helstrom measurement attains the trace distance.
    Povm hel = helstrom_povm(rho, sigma);
    double cd = classical_trace_distance(induced_distribution(rho, hel),
                                         induced_distribution(sigma, hel));
    check(std::abs(cd - rep.trace_distance) <= 1e-8,
          "Helstrom measurement misses trace distance: " + fmt(cd) + " vs " +
              fmt(rep.trace_distance));

    // Arbitrary POVMs never exceed it, and the bridge identity holds.
    Povm povm = random_povm(dim, local.uniform_int(2, 8), local);
    ClassicalDistribution p = induced_distribution(rho, povm);
    ClassicalDistribution q = induced_distribution(sigma, povm);
    double cd2 = classical_trace_distance(p, q);
    check(cd2 <= rep.trace_distance + 1e-8, "measured trace distance exceeds quantum value");
    double sq = 0;
    for (Index m = 0; m < p.size(); ++m) {
      double d2 = std::sqrt(p.probabilities(m)) - std::sqrt(q.probabilities(m));
      sq += d2 * d2;
    }
    check(std::abs(sq - 2.0 * (1.0 - classical_fidelity(p, q))) <= 1e-9,
          "Hellinger identity fails");
    check(sq <= 2.0 * cd2 + 1e-12, "Hellinger-to-l1 inequality fails");
  }
}

void suite_povm_bounds(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    double f = fidelity(rho, sigma);
    Povm povm = random_povm(dim, local.uniform_int(2, 8), local);
    double cf = classical_fidelity(induced_distribution(rho, povm),
                                   induced_distribution(sigma, povm));
    check(cf >= f - 1e-8,
          "measured fidelity dips below quantum value: " + fmt(cf) + " < " + fmt(f));
  }
}

void suite_optimal_povm(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 16);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    double f = fidelity(rho, sigma);
    Povm opt = fidelity_optimal_povm(rho, sigma);
    double cf = classical_fidelity(induced_distribution(rho, opt),
                                   induced_distribution(sigma, opt));
    check(std::abs(cf - f) <= 1e-7,
          "optimal measurement misses equality: " + fmt(cf) + " vs " + fmt(f));
  }
}

void suite_monotonicity(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 8);
    DensityMatrix rho = random_state(dim, local);
    DensityMatrix sigma = random_state(dim, local);
    KrausChannel ch = random_channel(dim, local.uniform_int(1, 4), local);
    double before = fidelity(rho, sigma);
    double after = fidelity(apply_channel(ch, rho), apply_channel(ch, sigma));
    check(after >= before - 1e-8,
          "channel decreased fidelity: " + fmt(after) + " < " + fmt(before));
  }
}

void suite_strong_concavity(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 8);
    Index k = local.uniform_int(1, 5);
    Ensemble ea = random_ensemble(dim, k, local);
    Ensemble eb = random_ensemble(dim, k, local);
    Matrix ma = Matrix::Zero(dim, dim), mb = Matrix::Zero(dim, dim);
    double rhs = 0;
    for (Index i = 0; i < k; ++i) {
      ma += ea.weights(i) * ea.states[static_cast<std::size_t>(i)].matrix();
      mb += eb.weights(i) * eb.states[static_cast<std::size_t>(i)].matrix();
      rhs += std::sqrt(ea.weights(i) * eb.weights(i)) *
             fidelity(ea.states[static_cast<std::size_t>(i)],
                      eb.states[static_cast<std::size_t>(i)]);
    }
    double lhs = fidelity(DensityMatrix(ma, 1e-8), DensityMatrix(mb, 1e-8));
    check(lhs >= rhs - 1e-8, "strong concavity fails: " + fmt(lhs) + " < " + fmt(rhs));
  }
}

void suite_channel_fidelities(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(t);
    Index dim = local.uniform_int(2, 6);
    Index k = local.uniform_int(1, 4);
    DensityMatrix rho = random_state(dim, local);
    KrausChannel ch = random_channel(dim, k, local);
    double ef = entanglement_fidelity(rho, ch);

    double io = fidelity(rho, apply_channel(ch, rho));
    check(ef <= io * io + 1e-8,
          "entanglement fidelity exceeds squared input-output fidelity");

    check(std::abs(ef - entanglement_fidelity_purified(rho, ch)) <= 1e-8,
          "Kraus-sum and purification routes disagree");

    // Remixing the Kraus set by a unitary leaves the channel invariant.
    Matrix u = local.haar_unitary(k);
    std::vector<Matrix> remixed(static_cast<std::size_t>(k), Matrix::Zero(dim, dim));
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j)
        remixed[static_cast<std::size_t>(i)] += u(i, j) * ch.kraus_ops()[static_cast<std::size_t>(j)];
    check(std::abs(ef - entanglement_fidelity(rho, KrausChannel(std::move(remixed)))) <= 1e-9,
          "entanglement fidelity depends on the Kraus representation");

    // Convexity in the state argument.
    DensityMatrix rho2 = random_state(dim, local);
    double f2 = convexity_second_derivative(rho, rho2, ch);
    check(f2 >= -1e-12, "closed-form second derivative is negative: " + fmt(f2));
    auto f_at = [&](double x) {
      Matrix mix = x * rho.matrix() + (1.0 - x) * rho2.matrix();
      return entanglement_fidelity(DensityMatrix(mix, 1e-8), ch);
    };
    double h = 1e-4;
    double fd = (f_at(0.5 + h) - 2.0 * f_at(0.5) + f_at(0.5 - h)) / (h * h);
    check(std::abs(fd - f2) <= 1e-5 * std::max(1.0, f2) + 1e-7,
          "finite-difference second derivative disagrees: " + fmt(fd) + " vs " + fmt(f2));
    double mid = f_at(0.5), ends = 0.5 * (f_at(0.0) + f_at(1.0));
    check(mid <= ends + 1e-9, "midpoint convexity fails");

    // Ensemble average dominates.
    Ensemble ens = random_ensemble(dim, local.uniform_int(1, 6), local);
    Matrix avg = Matrix::Zero(dim, dim);
    double intermediate = 0;
    for (Index j = 0; j < ens.weights.size(); ++j) {
      avg += ens.weights(j) * ens.states[static_cast<std::size_t>(j)].matrix();
      intermediate += ens.weights(j) * entanglement_fidelity(ens.states[static_cast<std::size_t>(j)], ch);
    }
    double favg = entanglement_fidelity(DensityMatrix(avg, 1e-8), ch);
    double fbar = ensemble_average_fidelity(ens, ch);
    check(favg <= intermediate + 1e-8, "average-state entanglement fidelity exceeds mixture bound");
    check(favg <= fbar + 1e-8, "average-state entanglement fidelity exceeds ensemble average");
  }
}

void suite_truncation(SuiteResult& r, Rng& rng, int trials) {
  Check check{&r};
  (void)rng;
  (void)trials;
  Index cap = 256;

  SpectralStateGenerator g1 = SpectralStateGenerator::geometric(0.5);
  SpectralStateGenerator g2 = SpectralStateGenerator::geometric(1.0 / 3.0);

  // Tail mass of the geometric sequence is exact.
  for (Index n : {1, 2, 4, 8, 16}) {
    double sym = 1.0 - std::pow(0.5, double(n));
    double summed = 0;
    for (Index i = 0; i < n; ++i) summed += g1.probability(i, cap);
    check(std::abs(g1.partial_mass(n, cap) - sym) <= 1e-12, "geometric tail mass mismatch");
    check(std::abs(summed - sym) <= 1e-12, "summed sequence mass mismatch");
    check(std::abs(materialize(g1, n, cap).matrix().trace().real() - 1.0) <= 1e-12,
          "materialized state trace is not 1");
  }

  // Commuting diagonal fidelity equals the classical fidelity of the spectra.
  for (Index n : {4, 8, 16}) {
    DensityMatrix a = materialize(g1, n, cap), b = materialize(g2, n, cap);
    double closed = 0;
    for (Index i = 0; i < n; ++i)
      closed += std::sqrt(a.matrix()(i, i).real() * b.matrix()(i, i).real());
    check(std::abs(fidelity(a, b) - closed) <= 1e-9, "diagonal closed form disagrees");
  }

  ConvergenceReport rep = truncated_fidelity_sweep(g1, g2, {4, 8, 16, 32, 64}, cap);
  double prev_povm = 2.0, prev_limit = 2.0, prev_alpha = 0.0;
  for (const ConvergenceRow& row : rep.rows) {
    check(row.alpha_n >= prev_alpha - 1e-12, "alpha_n not nondecreasing");
    prev_alpha = row.alpha_n;
    check(row.povm_gap >= -1e-9, "lifted measurement gap is negative: " + fmt(row.povm_gap));
    check(row.povm_gap <= prev_povm + 1e-9, "lifted measurement gap is not nonincreasing");
    prev_povm = row.povm_gap;
    check(row.gap_to_limit <= prev_limit + 1e-9, "limit gap is not nonincreasing");
    prev_limit = row.gap_to_limit;
  }
  check(rep.rows.back().povm_gap < 1e-3, "lifted measurement gap too large at dim 64");

  Index n_eps = epsilon_schedule(g1, g2, 1e-3, cap);
  DensityMatrix rho = materialize(g1, cap, cap), sigma = materialize(g2, cap, cap);
  double gap = lifted_truncation_povm(rho, sigma, n_eps, limit_fidelity(g1, g2, cap)).gap;
  check(gap < 1e-3, "epsilon schedule output fails its defining inequality");
  check(epsilon_schedule(g1, g2, 2.0, cap) == 1, "vacuous tolerance should stop at dim 1");
}

struct SuiteDef {
  std::string property;
  int default_trials;
  std::function<void(SuiteResult&, Rng&, int)> run;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> defs = {
      {"trace-norm-attainment",
       {"trace norm attained by the polar unitary and dominating Tr(ABU)", 50,
        suite_trace_norm_attainment}},
      {"uhlmann-attainment",
       {"purification overlap maximum equals the fidelity", 50, suite_uhlmann}},
      {"fidelity-basic",
       {"fidelity symmetry, unitary invariance, route agreement, indiscernibility", 100,
        suite_fidelity_basic}},
      {"bures-triangle", {"triangle inequality for the fidelity angle", 200, suite_bures_triangle}},
      {"distance-bounds",
       {"1-F <= D <= sqrt(1-F^2), pure-pair tightness, Helstrom attainment", 100,
        suite_fvdg_bounds}},
      {"measured-fidelity-bound",
       {"measured classical fidelity never drops below the quantum fidelity", 200,
        suite_povm_bounds}},
      {"optimal-measurement",
       {"eigenbasis measurement of M attains the quantum fidelity", 100, suite_optimal_povm}},
      {"monotonicity", {"fidelity never decreases under a channel", 100, suite_monotonicity}},
      {"strong-concavity",
       {"fidelity of mixtures dominates the weighted fidelity sum", 100, suite_strong_concavity}},
      {"channel-fidelities",
       {"entanglement fidelity bounds, convexity, representation independence", 100,
        suite_channel_fidelities}},
      {"truncation-convergence",
       {"truncated measurements approach the fidelity from above", 1, suite_truncation}},
  };
  return defs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, def] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
  auto it = registry().find(name);
  require(it != registry().end(), ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  result.property = it->second.property;
  result.trials = trials > 0 ? trials : it->second.default_trials;
  Rng rng = Rng(seed).split(std::hash<std::string>{}(name));
  it->second.run(result, rng, result.trials);
  return result;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int trials) {
  std::vector<SuiteResult> results;
  for (const std::string& name : suite_names()) results.push_back(run_suite(name, seed, trials));
  return results;
}

}  // namespace qfid
