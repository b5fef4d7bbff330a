// Driven-Hamiltonian merging, product-formula steps, and the a priori
// error/depth bounds.
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qocsim/errors.hpp"
#include "qocsim/oracle.hpp"
#include "qocsim/trotter.hpp"

using namespace qocsim;

namespace {

DrivenHamiltonian two_qubit_model() {
  PauliSum drift(2), control(2);
  drift.add(PauliString("ZI"), 0.9);
  drift.add(PauliString("IZ"), -0.4);
  drift.add(PauliString("XX"), 0.25);
  control.add(PauliString("XI"), 0.5);
  control.add(PauliString("IX"), 0.5);
  control.add(PauliString("XX"), -0.1);
  return DrivenHamiltonian::merge(drift, control);
}

} // namespace

TEST_CASE("merge takes the union of drift and control strings") {
  const DrivenHamiltonian h = two_qubit_model();
  CHECK(h.width == 2);
  CHECK(h.term_count() == 5);

  // Round trip back to the parts.
  const PauliSum drift = h.drift();
  CHECK(drift.coefficient(PauliString("ZI")) == 0.9);
  CHECK(drift.coefficient(PauliString("XI")) == 0.0);
  CHECK(drift.coefficient(PauliString("XX")) == 0.25);
  const PauliSum control = h.control();
  CHECK(control.coefficient(PauliString("IX")) == 0.5);
  CHECK(control.coefficient(PauliString("XX")) == -0.1);
  CHECK(control.coefficient(PauliString("ZI")) == 0.0);

  // at_field combines g0 + f*gc per string.
  const PauliSum at = h.at_field(2.0);
  CHECK(at.coefficient(PauliString("XX")) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(at.coefficient(PauliString("XI")) == 1.0);

  PauliSum wrong(3);
  wrong.add(PauliString("ZII"), 1.0);
  CHECK_THROWS_AS(DrivenHamiltonian::merge(drift, wrong), invariant_error);
}

TEST_CASE("lambda_max scans all field samples") {
  const DrivenHamiltonian h = two_qubit_model();
  const std::vector<double> field = {0.0, 1.0, -2.0};
  // |g0 + f*gc| maxima: ZI 0.9 always; XI reaches |0.5*-2| = 1.0;
  // XX reaches |0.25 - 0.1*-2| = 0.45.
  CHECK(h.lambda_max(field) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h.lambda_max(std::vector<double>{0.0}) == doctest::Approx(0.9));
}

TEST_CASE("suzuki gamma follows the recursion coefficient") {
  CHECK(suzuki_gamma(2) == doctest::Approx(0.41449077179437571).epsilon(1e-15));
  CHECK(suzuki_gamma(3) == doctest::Approx(0.37306582773327279).epsilon(1e-15));
  CHECK_THROWS_AS(suzuki_gamma(1), invariant_error);
}

TEST_CASE("product formulas converge to the exact step at their order") {
  const DrivenHamiltonian h = two_qubit_model();
  const double f = 0.8, dt = 0.7;
  const DenseMatrix target =
      expm_hermitian(reconstruct(h.at_field(f)), dt);

  auto step_error = [&](int order, std::int64_t n) {
    DenseMatrix u(4, 4);
    for (int col = 0; col < 4; ++col) {
      StateVector psi = StateVector::basis_state(2, static_cast<std::uint64_t>(col));
      trotter_step(psi, h, f, dt, order, n);
      u.col(col) = psi.to_eigen();
    }
    return spectral_norm(u - target);
  };

  // Doubling n divides the error by about 2^order.
  for (const int order : {1, 2, 4}) {
    const double e1 = step_error(order, 8);
    const double e2 = step_error(order, 16);
    const double ratio = e1 / e2;
    const double expected = std::pow(2.0, order);
    CHECK(ratio > 0.7 * expected);
    CHECK(ratio < 1.4 * expected);
  }
  CHECK(step_error(4, 4) < step_error(2, 4));
  CHECK(step_error(2, 4) < step_error(1, 4));
}

TEST_CASE("second-order sweep is time-symmetric") {
  const DrivenHamiltonian h = two_qubit_model();
  StateVector psi = StateVector::basis_state(2, 1);
  StateVector original = psi;
  trotter_step(psi, h, 0.3, 0.9, 2, 1);
  trotter_step(psi, h, 0.3, -0.9, 2, 1);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    CHECK(std::abs(psi[i] - original[i]) < 1e-13);
}

TEST_CASE("trotter_step validates its arguments") {
  const DrivenHamiltonian h = two_qubit_model();
  StateVector psi = StateVector::basis_state(2, 0);
  CHECK_THROWS_AS(trotter_step(psi, h, 0.0, 0.1, 3, 1), invariant_error);
  CHECK_THROWS_AS(trotter_step(psi, h, 0.0, 0.1, 0, 1), invariant_error);
  CHECK_THROWS_AS(trotter_step(psi, h, 0.0, 0.1, 2, 0), invariant_error);
  StateVector narrow = StateVector::basis_state(1, 0);
  CHECK_THROWS_AS(trotter_step(narrow, h, 0.0, 0.1, 2, 1), invariant_error);

  TrotterPlan plan;
  plan.order = 2;
  plan.n = 1;
  plan.dt = 0.1;
  plan.n_steps = 3;
  CHECK_THROWS_AS(evolve(psi, h, std::vector<double>{0.0, 0.0}, plan),
                  invariant_error);
}

TEST_CASE("error bound formulas match their closed forms") {
  // N = 10 steps, L = 5 terms, Lambda = 0.3, dt = 0.2.
  CHECK(error_bound_pf1(10, 5, 0.3, 0.2, 4) ==
        doctest::Approx(0.225).epsilon(1e-15));
  CHECK(error_bound_pf2p(10, 5, 0.3, 0.2, 4, 1) ==
        doctest::Approx(0.135).epsilon(1e-14));
  CHECK(error_bound_pf2p(10, 5, 0.3, 0.2, 4, 2) ==
        doctest::Approx(9.4921875).epsilon(1e-14));

  // Scaling in n: PF1 ~ 1/n, PF2 ~ 1/n^2, PF4 ~ 1/n^4.
  CHECK(error_bound_pf1(10, 5, 0.3, 0.2, 8) ==
        doctest::Approx(0.5 * 0.225).epsilon(1e-14));
  CHECK(error_bound_pf2p(10, 5, 0.3, 0.2, 8, 1) ==
        doctest::Approx(0.25 * 0.135).epsilon(1e-14));
  CHECK(error_bound_pf2p(10, 5, 0.3, 0.2, 8, 2) ==
        doctest::Approx(9.4921875 / 16.0).epsilon(1e-14));
}

TEST_CASE("depth bound formulas match their closed forms") {
  CHECK(depth_bound_pf1(10, 5, 0.3, 0.2, 1e-3) ==
        doctest::Approx(4500.0).epsilon(1e-14));
  CHECK(depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3, 1) ==
        doctest::Approx(6495.1905283832912).epsilon(1e-13));
  CHECK(depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3, 2) ==
        doctest::Approx(39016.794846448291).epsilon(1e-13));

  // Tightening epsilon by 16x costs 2x depth for a second-order formula
  // and ~2x for fourth order per its 1/(2p) root.
  const double d2a = depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3, 1);
  const double d2b = depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3 / 16.0, 1);
  CHECK(d2b / d2a == doctest::Approx(4.0).epsilon(1e-12));
  const double d4a = depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3, 2);
  const double d4b = depth_bound_pf2p(10, 5, 0.3, 0.2, 1e-3 / 16.0, 2);
  CHECK(d4b / d4a == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("exponential count reflects the executed sweeps") {
  TrotterPlan plan;
  plan.dt = 0.1;
  plan.n_steps = 10;
  plan.n = 4;
  plan.order = 1;
  CHECK(exponential_count(5, plan) == 5.0 * 4.0 * 10.0);
  plan.order = 2;
  CHECK(exponential_count(5, plan) == 2.0 * 5.0 * 4.0 * 10.0);
  plan.order = 4;
  CHECK(exponential_count(5, plan) == 2.0 * 5.0 * 5.0 * 4.0 * 10.0);
  plan.order = 6;
  CHECK(exponential_count(5, plan) == 2.0 * 5.0 * 25.0 * 4.0 * 10.0);
}
