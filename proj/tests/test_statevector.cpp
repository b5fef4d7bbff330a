// State-vector kernels: Pauli application, exponentials (parallel vs serial
// reference), expectation values, gates, and shot sampling.
#include <cmath>
#include <random>

#include "doctest.h"
#include "qocsim/errors.hpp"
#include "qocsim/statevector.hpp"

using namespace qocsim;

namespace {

StateVector random_state(std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  StateVector psi(width);
  for (auto& a : psi.amplitudes()) a = complexd{u(rng), u(rng)};
  psi.normalize();
  return psi;
}

PauliString random_string(std::size_t width, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(0, 3);
  std::string text(width, 'I');
  const char chars[4] = {'I', 'X', 'Y', 'Z'};
  for (auto& c : text) c = chars[u(rng)];
  if (text.find_first_not_of('I') == std::string::npos) text[0] = 'X';
  return PauliString(text);
}

} // namespace

TEST_CASE("basis states and norms") {
  const StateVector psi = StateVector::basis_state(3, 5);
  CHECK(psi.width() == 3);
  CHECK(psi.dim() == 8);
  CHECK(psi[5] == complexd{1.0, 0.0});
  CHECK(psi.norm() == 1.0);
  CHECK_THROWS_AS(StateVector::basis_state(3, 8), invariant_error);
  CHECK_THROWS_AS(StateVector(0), invariant_error);

  StateVector scaled(1);
  scaled[0] = complexd{3.0, 0.0};
  scaled[1] = complexd{0.0, 4.0};
  CHECK(scaled.norm() == doctest::Approx(5.0).epsilon(1e-15));
  scaled.normalize();
  CHECK(scaled.norm() == doctest::Approx(1.0).epsilon(1e-15));

  StateVector zero(1);
  zero[0] = 0.0;
  CHECK_THROWS_AS(zero.normalize(), invariant_error);
}

TEST_CASE("eigen conversion round trip") {
  const StateVector psi = random_state(4, 11);
  const StateVector back = StateVector::from_eigen(4, psi.to_eigen());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    CHECK(std::abs(psi[i] - back[i]) == 0.0);
  CHECK_THROWS_AS(StateVector::from_eigen(3, psi.to_eigen()), invariant_error);
}

TEST_CASE("apply_pauli matches the dense matrix action") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 8; ++rep) {
    const std::size_t width = 1 + static_cast<std::size_t>(rep % 4);
    const PauliString op = random_string(width, rng);
    const StateVector psi = random_state(width, 100 + static_cast<std::uint64_t>(rep));
    StateVector applied = psi;
    apply_pauli(op, applied);
    const DenseVector expected = op.matrix() * psi.to_eigen();
    CHECK((applied.to_eigen() - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("pauli exponential equals cos - i sin identity") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t width = 1 + static_cast<std::size_t>(rep % 5);
    const PauliString op = random_string(width, rng);
    const double theta = angle(rng);
    const StateVector psi = random_state(width, 200 + static_cast<std::uint64_t>(rep));

    StateVector fast = psi;
    apply_pauli_exponential(fast, op, theta);

    StateVector rotated = psi;
    apply_pauli(op, rotated);
    DenseVector expected = std::cos(theta) * psi.to_eigen() -
                           complexd{0.0, 1.0} * std::sin(theta) * rotated.to_eigen();
    CHECK((fast.to_eigen() - expected).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(fast.norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("parallel kernel agrees with the serial reference implementation") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (const std::size_t width : {1u, 3u, 6u, 9u}) {
    StateVector fast = random_state(width, 300 + width);
    StateVector slow = fast;
    for (int rep = 0; rep < 16; ++rep) {
      const PauliString op = random_string(width, rng);
      const double theta = angle(rng);
      apply_pauli_exponential(fast, op, theta);
      reference::apply_pauli_exponential(slow, op, theta);
    }
    double max_diff = 0.0;
    for (std::size_t i = 0; i < fast.dim(); ++i)
      max_diff = std::max(max_diff, std::abs(fast[i] - slow[i]));
    CHECK(max_diff < 1e-13);
  }
}

TEST_CASE("identity exponential applies a pure global phase") {
  const StateVector psi = random_state(2, 51);
  StateVector rotated = psi;
  apply_pauli_exponential(rotated, PauliString("II"), 0.75);
  const complexd phase{std::cos(0.75), -std::sin(0.75)};
  for (std::size_t i = 0; i < psi.dim(); ++i)
    CHECK(std::abs(rotated[i] - phase * psi[i]) < 1e-15);
}

TEST_CASE("norm drift stays below 1e-8 over one million exponentials") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  StateVector psi = random_state(4, 400);
  std::vector<PauliString> ops;
  for (int i = 0; i < 64; ++i) ops.push_back(random_string(4, rng));
  std::vector<double> angles;
  for (int i = 0; i < 64; ++i) angles.push_back(angle(rng));
  for (int k = 0; k < 1000000; ++k)
    apply_pauli_exponential(psi, ops[static_cast<std::size_t>(k & 63)],
                            angles[static_cast<std::size_t>((k * 7) & 63)]);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-8);
}

TEST_CASE("expectation values match the dense quadratic form") {
  const StateVector psi = random_state(3, 71);
  const PauliString op("XZY");
  const DenseVector v = psi.to_eigen();
  const double dense = std::real(v.dot(op.matrix() * v));
  CHECK(expectation(psi, op) == doctest::Approx(dense).epsilon(1e-13));

  PauliSum sum(3);
  sum.add(PauliString("XZY"), 0.5);
  sum.add(PauliString("ZII"), -2.0);
  sum.add(PauliString("III"), 0.25);
  const double dense_sum =
      0.5 * dense + std::real(v.dot(PauliString("ZII").matrix() * v)) * -2.0 +
      0.25;
  CHECK(expectation(psi, sum) == doctest::Approx(dense_sum).epsilon(1e-13));
}

TEST_CASE("one-qubit gates and CNOT match their dense embeddings") {
  const StateVector psi = random_state(3, 81);
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);

  for (std::size_t site = 0; site < 3; ++site) {
    StateVector applied = psi;
    apply_one_qubit_gate(applied, site, h);
    // Dense embedding: site 0 is the most significant factor.
    DenseMatrix full = DenseMatrix::Identity(1, 1);
    for (std::size_t s = 0; s < 3; ++s) {
      const DenseMatrix factor =
          (s == site) ? DenseMatrix(h) : DenseMatrix(DenseMatrix::Identity(2, 2));
      DenseMatrix next(full.rows() * 2, full.cols() * 2);
      for (Eigen::Index i = 0; i < full.rows(); ++i)
        for (Eigen::Index j = 0; j < full.cols(); ++j)
          next.block(2 * i, 2 * j, 2, 2) = full(i, j) * factor;
      full = next;
    }
    CHECK((applied.to_eigen() - full * psi.to_eigen()).cwiseAbs().maxCoeff() <
          1e-14);
  }

  // CNOT with control on site 0, target site 2 maps |100> -> |101>.
  StateVector basis = StateVector::basis_state(3, 0b100);
  apply_cnot(basis, 0, 2);
  CHECK(std::abs(basis[0b101] - complexd{1.0, 0.0}) < 1e-15);
  apply_cnot(basis, 2, 0);
  CHECK(std::abs(basis[0b001] - complexd{1.0, 0.0}) < 1e-15);
  StateVector untouched = StateVector::basis_state(3, 0b010);
  apply_cnot(untouched, 0, 2);
  CHECK(std::abs(untouched[0b010] - complexd{1.0, 0.0}) < 1e-15);
  CHECK_THROWS_AS(apply_cnot(untouched, 1, 1), invariant_error);
}

TEST_CASE("sampled expectation is deterministic and converges as 1/sqrt(shots)") {
  const StateVector psi = random_state(4, 91);
  PauliSum obs(4);
  obs.add(PauliString("ZIII"), 0.8);
  obs.add(PauliString("XXII"), 0.5);
  obs.add(PauliString("IIYZ"), -0.3);
  obs.add(PauliString("IIII"), 0.1);
  const double exact = expectation(psi, obs);

  CHECK(sampled_expectation(psi, obs, 4096, 17) ==
        sampled_expectation(psi, obs, 4096, 17));
  CHECK(sampled_expectation(psi, obs, 4096, 17) !=
        sampled_expectation(psi, obs, 4096, 18));

  // Average |error| over seeds at increasing shot counts. A 16x shot
  // increase should cut the error 4x; allow a 2x statistical slack on top.
  double mean_err[3] = {0.0, 0.0, 0.0};
  const std::uint64_t shot_counts[3] = {256, 4096, 65536};
  for (int level = 0; level < 3; ++level) {
    for (std::uint64_t seed = 0; seed < 48; ++seed)
      mean_err[level] +=
          std::abs(sampled_expectation(psi, obs, shot_counts[level], seed) - exact);
    mean_err[level] /= 48.0;
  }
  CHECK(mean_err[1] < 0.50 * mean_err[0]);
  CHECK(mean_err[2] < 0.50 * mean_err[1]);
  CHECK(mean_err[2] < 0.01);

  // An identity-only observable is sampled exactly.
  PauliSum id_only(4);
  id_only.add(PauliString("IIII"), 0.625);
  CHECK(sampled_expectation(psi, id_only, 1, 0) == 0.625);
  CHECK_THROWS_AS(sampled_expectation(psi, obs, 0, 0), invariant_error);
}
