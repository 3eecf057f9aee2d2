#include <doctest.h>

#include "qfid/hermitian.hpp"
#include "qfid/random.hpp"

using namespace qfid;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Matrix random_psd(Index dim, Rng& rng) {
  Matrix g = rng.ginibre(dim, dim);
  return (g * g.adjoint()) / double(dim);
}

}  // namespace

TEST_CASE("psd_sqrt on analytic inputs") {
  CHECK((psd_sqrt(Matrix::Identity(2, 2)) - Matrix::Identity(2, 2)).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((psd_sqrt(diag2(4, 9)) - diag2(2, 3)).norm() < 1e-12);

  // Rank-1 projector onto |+>: eigenvalues {1, 0}, so the root is the
  // projector itself.
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((psd_sqrt(plus) - plus).norm() < 1e-12);
}

TEST_CASE("psd_sqrt rejects bad inputs") {
  Matrix notherm(2, 2);
  notherm << 1.0, Complex(0, 1), Complex(0, 2), 1.0;
  CHECK_THROWS_AS(psd_sqrt(notherm), Error);
  CHECK_THROWS_AS(psd_sqrt(diag2(1, -1)), Error);
  // Tiny negative eigenvalues are clipped, not rejected.
  CHECK_NOTHROW(psd_sqrt(diag2(1, -5e-11)));
}

TEST_CASE("psd_sqrt squared reconstructs the input") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_psd(rng.uniform_int(2, 12), rng);
    Matrix r = psd_sqrt(a);
    CHECK(rel_frobenius(r * r, a) < 1e-9);
  }
}

TEST_CASE("pinv_sqrt analytic cases and support identity") {
  CHECK((pinv_sqrt(diag2(4, 0)) - diag2(0.5, 0)).norm() < 1e-12);
  CHECK((pinv_sqrt(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm() < 1e-12);
  double rt2 = std::sqrt(2.0);
  CHECK((pinv_sqrt(diag2(0.5, 0.5)) - diag2(rt2, rt2)).norm() < 1e-12);

  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    Index dim = rng.uniform_int(2, 10);
    Index rank = rng.uniform_int(1, dim);
    Matrix g = rng.ginibre(dim, rank);
    Matrix a = g * g.adjoint();
    Matrix s = pinv_sqrt(a);
    Matrix proj = s * a * s;
    CHECK((proj - proj.adjoint()).norm() < 1e-8);
    CHECK((proj * proj - proj).norm() < 1e-8);
    CHECK((proj - support_projector(a)).norm() < 1e-7);
    CHECK(psd_rank(a) == rank);
  }
}

TEST_CASE("trace_norm analytic cases") {
  CHECK(trace_norm(diag2(1, -1)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_norm(Matrix::Zero(3, 3)) == doctest::Approx(0.0));
  // (1/2)(rho - sigma) with rho = I/2, sigma = |0><0| has eigenvalues +-1/4.
  Matrix half_diff = 0.5 * (0.5 * Matrix::Identity(2, 2) - diag2(1, 0));
  CHECK(trace_norm(half_diff) == doctest::Approx(0.5).epsilon(1e-12));
  // PSD input: trace norm equals the trace.
  Rng rng(13);
  Matrix a = random_psd(6, rng);
  CHECK(trace_norm(a) == doctest::Approx(a.trace().real()).epsilon(1e-10));
}

TEST_CASE("polar_unitary degenerate and analytic cases") {
  Matrix eye = Matrix::Identity(2, 2);
  CHECK((polar_unitary(eye, eye) - eye).norm() < 1e-12);

  // AB = 0: canonical completion is the identity.
  CHECK((polar_unitary(diag2(1, 0), diag2(0, 1)) - eye).norm() < 1e-12);

  // A = I/2, B = |0><0|: AB is PSD, so V acts as identity on the support.
  Matrix v = polar_unitary(0.5 * eye, diag2(1, 0));
  Vector e0 = Vector::Zero(2);
  e0(0) = 1;
  CHECK((v * e0 - e0).norm() < 1e-10);

  CHECK_THROWS_AS(polar_unitary(diag2(1, -1), eye), Error);
}

TEST_CASE("polar factor is unitary and attains the trace norm") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    Index dim = rng.uniform_int(2, 16);
    Matrix a = random_psd(dim, rng), b = random_psd(dim, rng);
    Matrix v = polar_unitary(a, b);
    CHECK((v.adjoint() * v - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);

    Matrix ab = a * b;
    double tn = trace_norm(ab);
    // AB = V |AB| with |AB| = V^dag A B.
    Matrix abs_ab = v.adjoint() * ab;
    CHECK((abs_ab - abs_ab.adjoint()).norm() < 1e-8);
    CHECK(rel_frobenius(v * abs_ab, ab) < 1e-9);

    Complex attained = (ab * v.adjoint()).trace();
    CHECK(std::abs(attained.imag()) < 1e-8);
    CHECK(attained.real() == doctest::Approx(tn).epsilon(1e-8));

    for (int u = 0; u < 10; ++u)
      CHECK(std::abs((ab * rng.haar_unitary(dim)).trace()) <= tn + 1e-8);
  }
}

TEST_CASE("spectral decomposition contract") {
  Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    Index dim = rng.uniform_int(2, 12);
    Matrix g = rng.ginibre(dim, dim);
    Matrix h = (g + g.adjoint()) / 2.0;
    SpectralDecomposition s = eig_hermitian(h);
    CHECK(rel_frobenius(s.reconstruct(), h) < 1e-9);
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors - Matrix::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    for (Index i = 1; i < dim; ++i) CHECK(s.eigenvalues(i) >= s.eigenvalues(i - 1));
  }
}
