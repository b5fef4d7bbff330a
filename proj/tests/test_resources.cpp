// Resource estimation: Pauli-exponential compilation, gate counts, and the
// closed-form qubit/term/depth formulas for the chromophore network family.

#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qocsim/errors.hpp"
#include "qocsim/oracle.hpp"
#include "qocsim/pauli.hpp"
#include "qocsim/resources.hpp"
#include "qocsim/statevector.hpp"
#include "qocsim/trotter.hpp"

using namespace qocsim;

namespace {

double unitary_distance(const DenseMatrix& a, const DenseMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("gate counts follow the parity-ladder construction") {
  // 2(w-1) CNOTs, one rotation, two basis changes per X or Y site.
  const CompiledExponential z = compile_pauli_exponential(PauliString("Z"), 0.3);
  CHECK(z.cnot_count == 0);
  CHECK(z.rotation_count == 1);
  CHECK(z.basis_change_count == 0);
  CHECK(z.gates.size() == 1);
  CHECK(z.gates[0].kind == GateKind::rz);
  CHECK(z.gates[0].angle == doctest::Approx(0.6).epsilon(1e-15));

  const CompiledExponential zz =
      compile_pauli_exponential(PauliString("ZZ"), 0.3);
  CHECK(zz.cnot_count == 2);
  CHECK(zz.rotation_count == 1);
  CHECK(zz.basis_change_count == 0);

  const CompiledExponential xxyy =
      compile_pauli_exponential(PauliString("XXYY"), -0.1);
  CHECK(xxyy.cnot_count == 6);
  CHECK(xxyy.rotation_count == 1);
  CHECK(xxyy.basis_change_count == 8);
  CHECK(xxyy.gates.size() == 6 + 1 + 8);

  // Identity sites do not enter the ladder.
  const CompiledExponential ixiz =
      compile_pauli_exponential(PauliString("IXIZ"), 0.7);
  CHECK(ixiz.cnot_count == 2);
  CHECK(ixiz.rotation_count == 1);
  CHECK(ixiz.basis_change_count == 2);
}

TEST_CASE("identity strings compile to a bare global phase") {
  const CompiledExponential id =
      compile_pauli_exponential(PauliString("III"), 0.4);
  CHECK(id.gates.empty());
  CHECK(id.global_phase == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(id.cnot_count == 0);
  CHECK(id.rotation_count == 0);

  // Applying it multiplies the state by exp(-i theta).
  StateVector psi = StateVector::basis_state(3, 5);
  apply_compiled(id, psi);
  const std::complex<double> expected =
      std::exp(std::complex<double>(0.0, -0.4));
  CHECK(std::abs(psi.amplitudes()[5] - expected) < 1e-15);
}

TEST_CASE("compiled circuits reproduce the direct exponential") {
  // Every nontrivial string on two qubits, plus a sample of wider strings.
  std::vector<std::string> cases;
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      cases.push_back(std::string{alphabet[a], alphabet[b]});
    }
  cases.insert(cases.end(), {"XYZ", "YZX", "ZXY", "YIY", "XZIZX"});

  std::mt19937_64 rng(411);
  std::uniform_real_distribution<double> angle(-1.5, 1.5);
  for (const std::string& text : cases) {
    const PauliString op(text);
    const double theta = angle(rng);
    const CompiledExponential circuit = compile_pauli_exponential(op, theta);
    const DenseMatrix u = compiled_unitary(circuit);
    const DenseMatrix expected = expm_hermitian(op.matrix(), theta);
    CAPTURE(text);
    CHECK(unitary_distance(u, expected) < 1e-12);
  }
}

TEST_CASE("apply_compiled agrees with the statevector exponential") {
  const PauliString op("XZY");
  const double theta = 0.37;
  const CompiledExponential circuit = compile_pauli_exponential(op, theta);

  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector psi(3);
  for (auto& a : psi.amplitudes()) a = complexd(gauss(rng), gauss(rng));
  psi.normalize();
  StateVector direct = psi;
  apply_pauli_exponential(direct, op, theta);
  apply_compiled(circuit, psi);
  double dev = 0.0;
  for (std::size_t j = 0; j < 8; ++j)
    dev = std::max(dev, std::abs(psi.amplitudes()[j] - direct.amplitudes()[j]));
  CHECK(dev < 1e-13);

  StateVector narrow = StateVector::basis_state(2, 0);
  CHECK_THROWS_AS(apply_compiled(circuit, narrow), invariant_error);
}

TEST_CASE("qubit counts for the chromophore network family") {
  CHECK(fmo_qubit_count(7, 2, 8) == 49);
  CHECK(fmo_qubit_count(1, 0, 2) == 1);
  CHECK(fmo_qubit_count(2, 1, 2) == 4);
  CHECK(fmo_qubit_count(3, 3, 16) == 39);
  CHECK(fmo_qubit_count(7, 1, 8) == 28);

  CHECK_THROWS_AS(fmo_qubit_count(7, 2, 6), config_error);  // not a power of 2
  CHECK_THROWS_AS(fmo_qubit_count(7, 2, 1), config_error);
  CHECK_THROWS_AS(fmo_qubit_count(0, 2, 8), config_error);
  CHECK_THROWS_AS(fmo_qubit_count(7, -1, 8), config_error);
}

TEST_CASE("term counts for the chromophore network family") {
  CHECK(fmo_term_count(1, 0) == 2);
  CHECK(fmo_term_count(7, 2) == 336);
  CHECK(fmo_term_count(2, 3) == 126);
  CHECK(fmo_term_count(7, 0) == 56);
  CHECK_THROWS_AS(fmo_term_count(0, 0), config_error);

  // Monotone in both chromophore count and mode count.
  for (int c = 1; c < 7; ++c)
    CHECK(fmo_term_count(c + 1, 2) > fmo_term_count(c, 2));
  for (int m = 0; m < 3; ++m)
    CHECK(fmo_term_count(7, m + 1) > fmo_term_count(7, m));
}

TEST_CASE("pf4 depth bound matches the generic formula and scaling") {
  const double lambda = 0.01, dt = 10.0, eps = 1e-5;
  const double depth = depth_upper_bound_pf4(7, 2, 8, lambda, dt, eps);
  const std::size_t l = static_cast<std::size_t>(fmo_term_count(7, 2));
  CHECK(depth ==
        doctest::Approx(depth_bound_pf2p(1, l, lambda, dt, eps, 2))
            .epsilon(1e-12));

  // Quartering epsilon by 16 doubles the depth (epsilon^(-1/4) scaling),
  // and the bound grows with every workload parameter.
  CHECK(depth_upper_bound_pf4(7, 2, 8, lambda, dt, eps / 16.0) ==
        doctest::Approx(2.0 * depth).epsilon(1e-12));
  CHECK(depth_upper_bound_pf4(7, 3, 8, lambda, dt, eps) > depth);
  CHECK(depth_upper_bound_pf4(7, 2, 8, lambda, 2.0 * dt, eps) > depth);

  CHECK_THROWS_AS(depth_upper_bound_pf4(7, 2, 8, 0.0, dt, eps), config_error);
  CHECK_THROWS_AS(depth_upper_bound_pf4(7, 2, 8, lambda, dt, -1.0),
                  config_error);
  CHECK_THROWS_AS(depth_upper_bound_pf4(7, 2, 5, lambda, dt, eps),
                  config_error);
}
