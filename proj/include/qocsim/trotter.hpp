#ifndef QOCSIM_TROTTER_HPP
#define QOCSIM_TROTTER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qocsim/pauli.hpp"
#include "qocsim/statevector.hpp"

namespace qocsim {

// One term of a field-driven Hamiltonian H(t) = sum_l (g0_l + f(t)*gc_l) B_l.
struct DrivenTerm {
  PauliString op;
  double g0 = 0.0;
  double gc = 0.0;
};

// Field-driven Hamiltonian over the union of drift and control strings, in
// a fixed canonical term order (the product-formula sweep order).
struct DrivenHamiltonian {
  std::size_t width = 0;
  std::vector<DrivenTerm> terms;

  static DrivenHamiltonian merge(const PauliSum& drift, const PauliSum& control);
  PauliSum drift() const;
  PauliSum control() const;
  PauliSum at_field(double f) const;
  std::size_t term_count() const { return terms.size(); }
  // Largest |g0 + f*gc| over terms and the given field samples (the Lambda
  // entering the error/depth bounds).
  double lambda_max(std::span<const double> field) const;
};

// Product-formula plan for piecewise-constant evolution: n_steps steps of
// length dt; within each step the field is frozen and the step operator is
// approximated by a product formula of the given order (1, 2, 4, 6, ...)
// with Trotter number n.
struct TrotterPlan {
  int order = 2;
  std::int64_t n = 1;
  double dt = 0.0;
  std::int64_t n_steps = 0;
  bool midpoint_sampling = false; // field sampled at step midpoints
};

// Suzuki recursion coefficient gamma_p = 1/(4 - 4^{1/(2p-1)}).
double suzuki_gamma(int p);

// One piecewise-constant step exp(-i H(f) dt) approximated by the product
// formula; f is the frozen field value for the step.
void trotter_step(StateVector& psi, const DrivenHamiltonian& h, double f,
                  double dt, int order, std::int64_t n);

// Full evolution; field[k] is the frozen field value of step k and must
// have n_steps entries.
void evolve(StateVector& psi, const DrivenHamiltonian& h,
            std::span<const double> field, const TrotterPlan& plan);

// A priori error bounds (operator-norm distance of the stepwise product
// formula from the exact piecewise-constant propagator; unit-constant
// convention) and the derived depth bounds, in terms of n_steps steps, L
// terms, coefficient bound Lambda, step dt, Trotter number n, half-order p.
double error_bound_pf1(std::int64_t n_steps, std::size_t l, double lambda,
                       double dt, std::int64_t n);
double error_bound_pf2p(std::int64_t n_steps, std::size_t l, double lambda,
                        double dt, std::int64_t n, int p);
// Exponential count needed to push the bound below epsilon.
double depth_bound_pf1(std::int64_t n_steps, std::size_t l, double lambda,
                       double dt, double epsilon);
double depth_bound_pf2p(std::int64_t n_steps, std::size_t l, double lambda,
                        double dt, double epsilon, int p);
// Exponential count actually executed by a plan.
double exponential_count(std::size_t l, const TrotterPlan& plan);

} // namespace qocsim

#endif
