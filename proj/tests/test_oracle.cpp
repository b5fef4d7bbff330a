// Dense reference propagators, matrix exponentials, and outcome
// distributions.
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qocsim/errors.hpp"
#include "qocsim/oracle.hpp"

using namespace qocsim;

namespace {

DenseMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          complexd{u(rng), u(rng)};
  return 0.5 * (m + m.adjoint());
}

DrivenHamiltonian two_qubit_model() {
  PauliSum drift(2), control(2);
  drift.add(PauliString("ZI"), 0.9);
  drift.add(PauliString("IZ"), -0.4);
  drift.add(PauliString("XX"), 0.25);
  control.add(PauliString("XI"), 0.5);
  control.add(PauliString("IX"), 0.5);
  return DrivenHamiltonian::merge(drift, control);
}

} // namespace

TEST_CASE("hermitian exponential matches the closed two-level form") {
  DenseMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const double theta = 0.635;
  const DenseMatrix u = expm_hermitian(z, theta);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, -theta)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, theta)) < 1e-15);
  CHECK(std::abs(u(0, 1)) < 1e-15);
}

TEST_CASE("eigendecomposition and Pade routes agree") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const DenseMatrix h = random_hermitian(8, seed);
    const double t = 0.85;
    const DenseMatrix via_eigh = expm_hermitian(h, t);
    const DenseMatrix via_pade = expm_pade(complexd{0.0, -t} * h);
    CHECK(spectral_norm(via_eigh - via_pade) < 1e-12);
    // Unitarity of the eigendecomposition route.
    const DenseMatrix gram = via_eigh.adjoint() * via_eigh;
    CHECK(spectral_norm(gram - DenseMatrix::Identity(8, 8)) < 1e-13);
  }
}

TEST_CASE("pade exponential handles non-hermitian input") {
  DenseMatrix nilpotent(2, 2);
  nilpotent << 0, 1, 0, 0;
  const DenseMatrix e = expm_pade(nilpotent);
  CHECK(std::abs(e(0, 0) - complexd{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(e(0, 1) - complexd{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(e(1, 0)) < 1e-14);
  // A matrix with a large norm exercises the scaling-and-squaring path.
  const DenseMatrix big = complexd{0.0, -40.0} * random_hermitian(4, 9);
  const DenseMatrix u = expm_pade(big);
  CHECK(spectral_norm(u.adjoint() * u - DenseMatrix::Identity(4, 4)) < 1e-11);
}

TEST_CASE("spectral norm equals the largest singular value") {
  DenseMatrix diag = DenseMatrix::Zero(3, 3);
  diag(0, 0) = -2.5;
  diag(1, 1) = 1.0;
  diag(2, 2) = 0.25;
  CHECK(spectral_norm(diag) == doctest::Approx(2.5).epsilon(1e-14));

  const DenseMatrix m = random_hermitian(6, 17) +
                        complexd{0.0, 1.0} * random_hermitian(6, 18);
  Eigen::JacobiSVD<DenseMatrix> svd(m);
  CHECK(spectral_norm(m) ==
        doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
}

TEST_CASE("exact propagator multiplies piecewise-constant steps in order") {
  const DrivenHamiltonian h = two_qubit_model();
  const DenseMatrix g0 = reconstruct(h.drift());
  const DenseMatrix gc = reconstruct(h.control());
  const std::vector<double> field = {0.25, -0.75, 1.5};
  const double dt = 0.4;

  const DenseMatrix u = exact_propagator(g0, gc, field, dt);
  DenseMatrix expected = DenseMatrix::Identity(4, 4);
  for (const double f : field)
    expected = expm_hermitian(g0 + f * gc, dt) * expected;
  CHECK(spectral_norm(u - expected) < 1e-13);
  CHECK(spectral_norm(u.adjoint() * u - DenseMatrix::Identity(4, 4)) < 1e-13);

  StateVector psi = StateVector::basis_state(2, 2);
  exact_evolve(psi, g0, gc, field, dt);
  CHECK((psi.to_eigen() - u.col(2)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("product-formula propagator error shrinks with the trotter number") {
  const DrivenHamiltonian h = two_qubit_model();
  const std::vector<double> field = {0.3, -0.2, 0.8, 0.1};
  TrotterPlan plan;
  plan.dt = 0.5;
  plan.n_steps = 4;
  plan.order = 2;

  double previous = 1e9;
  for (const std::int64_t n : {1, 2, 4, 8}) {
    plan.n = n;
    const double err = trotter_error(h, field, plan);
    CHECK(err < previous);
    previous = err;
  }
  plan.n = 64;
  plan.order = 4;
  CHECK(trotter_error(h, field, plan) < 1e-9);

  // pf_propagator columns are the kernel acting on basis states.
  plan.n = 2;
  plan.order = 2;
  const DenseMatrix u = pf_propagator(h, field, plan);
  StateVector psi = StateVector::basis_state(2, 1);
  evolve(psi, h, field, plan);
  CHECK((u.col(1) - psi.to_eigen()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("outcome probabilities group degenerate eigenvalues") {
  // Z on |+>: outcomes -1 and +1 with probability 1/2 each.
  StateVector plus(1);
  plus[0] = complexd{1.0, 0.0};
  plus[1] = complexd{1.0, 0.0};
  plus.normalize();
  DenseMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const OutcomeDistribution d = outcome_probabilities(plus, z);
  REQUIRE(d.eigenvalues.size() == 2);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.probabilities[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(d.probabilities[1] == doctest::Approx(0.5).epsilon(1e-13));

  // ZZ has two doubly-degenerate outcomes; on |00> the +1 branch is certain.
  StateVector zz_state = StateVector::basis_state(2, 0);
  DenseMatrix zz = DenseMatrix::Zero(4, 4);
  zz(0, 0) = 1;
  zz(1, 1) = -1;
  zz(2, 2) = -1;
  zz(3, 3) = 1;
  const OutcomeDistribution dz = outcome_probabilities(zz_state, zz);
  REQUIRE(dz.eigenvalues.size() == 2);
  CHECK(dz.probabilities[0] == doctest::Approx(0.0));
  CHECK(dz.probabilities[1] == doctest::Approx(1.0));

  // Probabilities always sum to one.
  const DenseMatrix obs = random_hermitian(4, 23);
  StateVector psi(2);
  psi[0] = complexd{0.5, 0.1};
  psi[1] = complexd{-0.3, 0.2};
  psi[2] = complexd{0.0, 0.7};
  psi[3] = complexd{0.35, 0.0};
  psi.normalize();
  const OutcomeDistribution dr = outcome_probabilities(psi, obs);
  double total = 0.0;
  for (const double p : dr.probabilities) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("max outcome deviation compares distributions pointwise") {
  StateVector zero = StateVector::basis_state(1, 0);
  StateVector one = StateVector::basis_state(1, 1);
  DenseMatrix z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(max_outcome_deviation(zero, zero, z) == doctest::Approx(0.0));
  CHECK(max_outcome_deviation(zero, one, z) == doctest::Approx(1.0));

  StateVector plus(1);
  plus[0] = complexd{1.0, 0.0};
  plus[1] = complexd{1.0, 0.0};
  plus.normalize();
  CHECK(max_outcome_deviation(zero, plus, z) == doctest::Approx(0.5).epsilon(1e-13));

  StateVector wide = StateVector::basis_state(2, 0);
  CHECK_THROWS_AS(max_outcome_deviation(zero, wide, z), invariant_error);
}
