#ifndef QOCSIM_OPTIMIZE_HPP
#define QOCSIM_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qocsim/field.hpp"
#include "qocsim/models.hpp"

namespace qocsim {

using ObjectiveFn = std::function<double(std::span<const double>)>;

enum class OptimizerMethod { nelder_mead, fd_gradient_descent };

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::nelder_mead;
  std::int64_t max_evaluations = 4000;
  // Nelder-Mead stopping: simplex spread and value spread must both drop
  // below these.
  double xatol = 1e-8;
  double fatol = 1e-10;
  bool adaptive = false; // dimension-adaptive expansion/contraction factors
  // Early exit once the objective itself reaches this level (<= 0 disables).
  double target_objective = 0.0;
  // Optional simple bounds, enforced by clamping plus a quadratic penalty.
  std::vector<double> lower, upper;
  // Finite-difference gradient descent.
  double fd_step = 1e-6;
  double learning_rate = 0.05;
  double learning_rate_decay = 0.0; // lr_k = learning_rate/(1 + decay*k)
  std::int64_t max_iterations = 200;
  std::uint64_t seed = 0; // recorded in traces; used by multi-trial drivers
  // Modeled measurement batches per objective evaluation (observable term
  // count of the underlying problem).
  std::int64_t observable_terms = 1;
};

struct TraceRow {
  std::int64_t iteration = 0;
  double best_value = 0.0;
  std::int64_t evaluations = 0;
  std::int64_t measurements = 0;
  std::vector<double> parameters; // current best
};

struct OptimizationResult {
  std::vector<double> best_parameters;
  double best_value = 0.0;
  std::int64_t evaluations = 0;
  bool tolerance_met = false;    // reached target_objective (when set)
  bool aborted_non_finite = false;
  std::vector<TraceRow> trace;
};

// Standard reflect/expand/contract/shrink simplex search. Deterministic for
// fixed inputs. Aborts (with the trace so far) if the objective returns a
// non-finite value.
OptimizationResult nelder_mead(const ObjectiveFn& objective,
                               std::span<const double> theta0,
                               const OptimizerConfig& config);

// Forward-difference gradient; evaluations counts K+1 objective calls.
std::vector<double> fd_gradient(const ObjectiveFn& objective,
                                std::span<const double> theta, double h,
                                std::int64_t& evaluations);

OptimizationResult fd_gradient_descent(const ObjectiveFn& objective,
                                       std::span<const double> theta0,
                                       const OptimizerConfig& config);

// Outer hybrid loop: optimize the field parameters of `initial` against
// evaluate_objective(problem, field, plan) with the configured method.
struct HybridResult {
  OptimizationResult optimization;
  ControlField best_field;
};
HybridResult hybrid_loop(const ControlProblem& problem,
                         const ControlField& initial, const TrotterPlan& plan,
                         const OptimizerConfig& config);

// Trace CSV with one row per iteration: iteration, J, evals,
// modeled_measurements, then the parameter vector.
void write_trace_csv(const std::string& path,
                     const OptimizationResult& result);

} // namespace qocsim

#endif
