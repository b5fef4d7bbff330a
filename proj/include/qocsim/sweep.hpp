#ifndef QOCSIM_SWEEP_HPP
#define QOCSIM_SWEEP_HPP

// Trotter-number convergence sweeps: measured spectral-norm error, objective
// error, and the a priori bound for each (order, n) grid point, plus fitted
// log-log convergence slopes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qocsim/models.hpp"

namespace qocsim {

struct SweepPoint {
  int order = 0;
  std::int64_t n = 0;
  double measured_error = 0.0;  // || U_pf - U_exact ||
  double objective_error = 0.0; // | J_pf - J_exact |
  double error_bound = 0.0;     // analytic bound for this (order, n)
};

struct SweepResult {
  std::vector<SweepPoint> points; // grouped by order, n ascending
  std::vector<std::pair<int, double>> slopes; // per-order log-log slope
  double lambda = 0.0;            // coefficient bound entering the bounds
  std::size_t terms = 0;          // Hamiltonian term count L
};

// Runs the grid; `workers` > 1 distributes grid points over threads (results
// are written by index, so the output is worker-count independent).
SweepResult run_trotter_sweep(const ControlProblem& problem,
                              std::span<const double> field,
                              const TrotterPlan& base,
                              std::span<const int> orders,
                              std::span<const std::int64_t> trotter_numbers,
                              int workers = 1);

// CSV with one row per grid point and per-order slope footer rows.
void write_sweep_csv(const std::string& path, const SweepResult& result);

} // namespace qocsim

#endif // QOCSIM_SWEEP_HPP
