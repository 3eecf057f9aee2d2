#include <doctest.h>

#include "qfid/states.hpp"

using namespace qfid;

namespace {

Vector basis(Index dim, Index i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1;
  return v;
}

}  // namespace

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix(0.5 * Matrix::Identity(2, 2)));
  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(2, 2)), Error);  // trace 2
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, Error);
  Matrix nonherm(2, 2);
  nonherm << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, Error);
}

TEST_CASE("from_pure builds the projector") {
  Vector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  DensityMatrix rho = DensityMatrix::from_pure(plus);
  Matrix expected(2, 2);
  expected << 0.5, 0.5, 0.5, 0.5;
  CHECK((rho.matrix() - expected).norm() < 1e-12);
  CHECK(rho.rank() == 1);
}

TEST_CASE("purify analytic cases") {
  // Pure |0><0| with a 1-dimensional ancilla: the product state |0>|0>.
  DensityMatrix ket0 = DensityMatrix::from_pure(basis(2, 0));
  Purification p0 = purify(ket0, 1);
  CHECK((p0.state.amplitudes - basis(2, 0)).norm() < 1e-10);

  // I/2: maximally entangled pair up to eigenvector phases. Check through the
  // reduction and through the Schmidt weights.
  DensityMatrix mixed(0.5 * Matrix::Identity(2, 2));
  Purification pm = purify(mixed, 2);
  CHECK(pm.system_dim == 2);
  CHECK(pm.ancilla_dim == 2);
  for (Index i = 0; i < 4; ++i)
    CHECK(std::abs(std::abs(pm.state.amplitudes(i)) - (i % 3 == 0 ? 1 / std::sqrt(2.0) : 0.0)) <
          1e-9);

  // diag(1/4, 3/4): amplitudes 1/2 and sqrt(3)/2 on distinct ancilla slots.
  Matrix d(2, 2);
  d << 0.25, 0, 0, 0.75;
  Purification pd = purify(DensityMatrix(d), 2);
  std::vector<double> mags;
  for (Index i = 0; i < 4; ++i) {
    double a = std::abs(pd.state.amplitudes(i));
    if (a > 1e-12) mags.push_back(a);
  }
  REQUIRE(mags.size() == 2);
  std::sort(mags.begin(), mags.end());
  CHECK(mags[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mags[1] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-10));
}

TEST_CASE("purify rejects undersized ancillas") {
  DensityMatrix mixed(0.5 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS(purify(mixed, 1), Error);
}

TEST_CASE("partial trace analytic cases") {
  // |0>|0> reduces to |0><0|.
  Purification p(2, 2, PureState(basis(4, 0)));
  Matrix r = partial_trace_ancilla(p).matrix();
  CHECK((r - basis(2, 0) * basis(2, 0).adjoint()).norm() < 1e-12);

  // (|0>|0> + |1>|1>)/sqrt(2) reduces to I/2.
  Vector bell = (basis(4, 0) + basis(4, 3)) / std::sqrt(2.0);
  Matrix rb = partial_trace_ancilla(Purification(2, 2, PureState(bell))).matrix();
  CHECK((rb - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-12);

  // (|0>|0> + |1>|0>)/sqrt(2): product state, reduces to |+><+|.
  Vector prod = (basis(4, 0) + basis(4, 2)) / std::sqrt(2.0);
  Matrix rp = partial_trace_ancilla(Purification(2, 2, PureState(prod))).matrix();
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((rp - plus).norm() < 1e-12);
}

TEST_CASE("partial trace inverts purify") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    Index dim = rng.uniform_int(2, 10);
    Index rank = rng.uniform_int(1, dim);
    DensityMatrix rho = random_density(dim, rank, rng);
    Index anc = rank + rng.uniform_int(0, 3);
    Purification psi = purify(rho, anc);
    CHECK(rel_frobenius(partial_trace_ancilla(psi).matrix(), rho.matrix()) < 1e-9);
  }
}

TEST_CASE("purified pure states have Schmidt rank 1") {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    Index dim = rng.uniform_int(2, 8);
    DensityMatrix rho = random_density(dim, 1, rng);
    Purification psi = purify(rho, dim);
    Eigen::Map<const Matrix> coef(psi.state.amplitudes.data(), psi.ancilla_dim, psi.system_dim);
    Eigen::JacobiSVD<Matrix> svd(coef);
    CHECK(svd.singularValues()(0) == doctest::Approx(1.0).epsilon(1e-9));
    if (svd.singularValues().size() > 1) CHECK(svd.singularValues()(1) < 1e-9);
  }
}

TEST_CASE("random_density contract") {
  Rng rng(7);
  DensityMatrix full = random_density(4, 4, rng);
  CHECK((full.matrix() - full.matrix().adjoint()).norm() < 1e-12);
  CHECK(std::abs(full.matrix().trace().real() - 1.0) < 1e-12);
  CHECK(full.rank() == 4);

  Rng rng1(1);
  CHECK(random_density(3, 2, rng1).rank() == 2);

  // Rank 1 gives an idempotent matrix.
  Rng rng2(5);
  Matrix p = random_density(2, 1, rng2).matrix();
  CHECK((p * p - p).norm() < 1e-9);

  // Determinism per seed.
  Rng a(99), b(99);
  CHECK((random_density(5, 3, a).matrix() - random_density(5, 3, b).matrix()).norm() == 0.0);

  CHECK_THROWS_AS(random_density(2, 3, rng), Error);
  CHECK_THROWS_AS(random_density(2, 0, rng), Error);
}

TEST_CASE("kron follows the system-major convention") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  // (i_s a_s + i_a, j_s a_s + j_a) entry is a(i_s,j_s) * b(i_a,j_a).
  CHECK(k(0, 1) == Complex(1, 0) * b(0, 1));
  CHECK(k(2, 1) == a(1, 0) * b(0, 1));
  CHECK(k(3, 3) == a(1, 1) * b(1, 1));
}
