#include "qocsim/trotter.hpp"

#include <cmath>

#include "qocsim/errors.hpp"

namespace qocsim {

DrivenHamiltonian DrivenHamiltonian::merge(const PauliSum& drift,
                                           const PauliSum& control) {
  if (drift.width() != control.width())
    throw invariant_error("merge: drift/control width mismatch");
  DrivenHamiltonian h;
  h.width = drift.width();
  // Union of the two canonical term lists, preserving sorted order.
  auto di = drift.terms().begin(), de = drift.terms().end();
  auto ci = control.terms().begin(), ce = control.terms().end();
  while (di != de || ci != ce) {
    if (ci == ce || (di != de && di->op < ci->op)) {
      h.terms.push_back({di->op, di->coefficient, 0.0});
      ++di;
    } else if (di == de || ci->op < di->op) {
      h.terms.push_back({ci->op, 0.0, ci->coefficient});
      ++ci;
    } else {
      h.terms.push_back({di->op, di->coefficient, ci->coefficient});
      ++di;
      ++ci;
    }
  }
  return h;
}

PauliSum DrivenHamiltonian::drift() const {
  PauliSum out(width);
  for (const auto& t : terms)
    if (t.g0 != 0.0) out.add(t.op, t.g0);
  return out;
}

PauliSum DrivenHamiltonian::control() const {
  PauliSum out(width);
  for (const auto& t : terms)
    if (t.gc != 0.0) out.add(t.op, t.gc);
  return out;
}

PauliSum DrivenHamiltonian::at_field(double f) const {
  PauliSum out(width);
  for (const auto& t : terms) out.add(t.op, t.g0 + f * t.gc);
  return out;
}

double DrivenHamiltonian::lambda_max(std::span<const double> field) const {
  double lam = 0.0;
  for (const auto& t : terms) {
    if (t.gc == 0.0) {
      lam = std::max(lam, std::abs(t.g0));
      continue;
    }
    for (const double f : field)
      lam = std::max(lam, std::abs(t.g0 + f * t.gc));
  }
  return lam;
}

double suzuki_gamma(int p) {
  if (p < 2) throw invariant_error("suzuki_gamma needs p >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * p - 1.0)));
}

namespace {

// Forward-then-reverse sweep: the second-order symmetric formula S2(tau).
void s2_sweep(StateVector& psi, const DrivenHamiltonian& h, double f,
              double tau) {
  const auto& terms = h.terms;
  for (std::size_t l = 0; l < terms.size(); ++l) {
    const double g = terms[l].g0 + f * terms[l].gc;
    if (g != 0.0) apply_pauli_exponential(psi, terms[l].op, g * tau / 2.0);
  }
  for (std::size_t l = terms.size(); l-- > 0;) {
    const double g = terms[l].g0 + f * terms[l].gc;
    if (g != 0.0) apply_pauli_exponential(psi, terms[l].op, g * tau / 2.0);
  }
}

// Suzuki recursion S_{2p}(tau) built from S_{2p-2}.
void suzuki_sweep(StateVector& psi, const DrivenHamiltonian& h, double f,
                  double tau, int p) {
  if (p == 1) {
    s2_sweep(psi, h, f, tau);
    return;
  }
  const double gamma = suzuki_gamma(p);
  suzuki_sweep(psi, h, f, gamma * tau, p - 1);
  suzuki_sweep(psi, h, f, gamma * tau, p - 1);
  suzuki_sweep(psi, h, f, (1.0 - 4.0 * gamma) * tau, p - 1);
  suzuki_sweep(psi, h, f, gamma * tau, p - 1);
  suzuki_sweep(psi, h, f, gamma * tau, p - 1);
}

} // namespace

void trotter_step(StateVector& psi, const DrivenHamiltonian& h, double f,
                  double dt, int order, std::int64_t n) {
  if (psi.width() != h.width)
    throw invariant_error("trotter_step width mismatch");
  if (n < 1) throw invariant_error("trotter_step needs n >= 1");
  if (order != 1 && (order < 2 || order % 2 != 0))
    throw invariant_error("product-formula order must be 1 or even");
  const double tau = dt / static_cast<double>(n);
  for (std::int64_t rep = 0; rep < n; ++rep) {
    if (order == 1) {
      for (const auto& t : h.terms) {
        const double g = t.g0 + f * t.gc;
        if (g != 0.0) apply_pauli_exponential(psi, t.op, g * tau);
      }
    } else {
      suzuki_sweep(psi, h, f, tau, order / 2);
    }
  }
}

void evolve(StateVector& psi, const DrivenHamiltonian& h,
            std::span<const double> field, const TrotterPlan& plan) {
  if (static_cast<std::int64_t>(field.size()) != plan.n_steps)
    throw invariant_error("evolve: field samples != n_steps");
  for (std::int64_t k = 0; k < plan.n_steps; ++k)
    trotter_step(psi, h, field[k], plan.dt, plan.order, plan.n);
}

double error_bound_pf1(std::int64_t n_steps, std::size_t l, double lambda,
                       double dt, std::int64_t n) {
  const double ld = static_cast<double>(l);
  return static_cast<double>(n_steps) * ld * ld * lambda * lambda * dt * dt /
         static_cast<double>(n);
}

double error_bound_pf2p(std::int64_t n_steps, std::size_t l, double lambda,
                        double dt, std::int64_t n, int p) {
  const double base = 2.0 * static_cast<double>(l) *
                      std::pow(5.0, p - 1) * lambda * dt;
  return static_cast<double>(n_steps) * std::pow(base, 2 * p + 1) /
         std::pow(static_cast<double>(n), 2 * p);
}

double depth_bound_pf1(std::int64_t n_steps, std::size_t l, double lambda,
                       double dt, double epsilon) {
  const double ld = static_cast<double>(l);
  return static_cast<double>(n_steps) * ld * ld * ld * lambda * lambda * dt *
         dt / epsilon;
}

double depth_bound_pf2p(std::int64_t n_steps, std::size_t l, double lambda,
                        double dt, double epsilon, int p) {
  const double ld = static_cast<double>(l);
  const double exponent = 1.0 + 1.0 / (2.0 * p);
  return std::pow(25.0, p) * static_cast<double>(n_steps) * ld *
         std::pow(ld * lambda * dt, exponent) /
         std::pow(epsilon, 1.0 / (2.0 * p));
}

double exponential_count(std::size_t l, const TrotterPlan& plan) {
  const double per_sweep =
      plan.order == 1 ? static_cast<double>(l)
                      : 2.0 * static_cast<double>(l) *
                            std::pow(5.0, plan.order / 2 - 1);
  return per_sweep * static_cast<double>(plan.n) *
         static_cast<double>(plan.n_steps);
}

} // namespace qocsim
