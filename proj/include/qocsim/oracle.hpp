#ifndef QOCSIM_ORACLE_HPP
#define QOCSIM_ORACLE_HPP

#include <span>
#include <vector>

#include "qocsim/statevector.hpp"
#include "qocsim/trotter.hpp"

namespace qocsim {

// Dense reference propagation and error measurement. Everything here is
// deliberately independent of the product-formula kernels: exponentials via
// eigendecomposition (or scaling-and-squaring), norms via SVD.

// exp(-i*H*t) for Hermitian H, via eigendecomposition.
DenseMatrix expm_hermitian(const DenseMatrix& h, double t);

// exp(A) for a general square matrix by scaling and squaring with a Pade
// approximant. Used to cross-check expm_hermitian through a second route.
DenseMatrix expm_pade(const DenseMatrix& a);

// Largest singular value. SVD for dimensions <= 1024, power iteration on
// A^dagger A beyond.
double spectral_norm(const DenseMatrix& a);

// Exact piecewise-constant propagator over the field samples.
DenseMatrix exact_propagator(const DenseMatrix& g0, const DenseMatrix& gc,
                             std::span<const double> field, double dt);

// Exact piecewise-constant evolution of a state.
void exact_evolve(StateVector& psi, const DenseMatrix& g0,
                  const DenseMatrix& gc, std::span<const double> field,
                  double dt);

// Product-formula propagator assembled column by column with the kernel
// implementation under test.
DenseMatrix pf_propagator(const DrivenHamiltonian& h,
                          std::span<const double> field,
                          const TrotterPlan& plan);

// Spectral-norm distance between the product-formula propagator of `plan`
// and the exact piecewise-constant propagator of the same field samples.
double trotter_error(const DrivenHamiltonian& h, std::span<const double> field,
                     const TrotterPlan& plan);

// Probabilities of measuring each distinct eigenvalue of `observable` in
// state psi. Eigenvalues within degeneracy_tol of each other are grouped.
struct OutcomeDistribution {
  std::vector<double> eigenvalues;
  std::vector<double> probabilities;
};
OutcomeDistribution outcome_probabilities(const StateVector& psi,
                                          const DenseMatrix& observable,
                                          double degeneracy_tol = 1e-8);

// Largest absolute difference between the outcome probabilities of two
// states for the same observable.
double max_outcome_deviation(const StateVector& a, const StateVector& b,
                             const DenseMatrix& observable,
                             double degeneracy_tol = 1e-8);

} // namespace qocsim

#endif
