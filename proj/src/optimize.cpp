#include "qocsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>

#include "qocsim/errors.hpp"

namespace qocsim {

namespace {

struct BoundedObjective {
  const ObjectiveFn& fn;
  const OptimizerConfig& config;
  std::int64_t evaluations = 0;

  double operator()(std::span<const double> theta) {
    std::vector<double> x(theta.begin(), theta.end());
    double penalty = 0.0;
    if (!config.lower.empty() || !config.upper.empty()) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        double lo = config.lower.empty() ? -1e300 : config.lower.at(i);
        double hi = config.upper.empty() ? 1e300 : config.upper.at(i);
        const double c = std::clamp(x[i], lo, hi);
        penalty += (x[i] - c) * (x[i] - c);
        x[i] = c;
      }
    }
    ++evaluations;
    return fn(x) + 1e6 * penalty;
  }
};

void push_trace(OptimizationResult& result, const OptimizerConfig& config,
                std::int64_t iteration, double best,
                const std::vector<double>& params,
                std::int64_t evaluations) {
  TraceRow row;
  row.iteration = iteration;
  row.best_value = best;
  row.evaluations = evaluations;
  row.measurements = evaluations * config.observable_terms;
  row.parameters = params;
  result.trace.push_back(std::move(row));
}

} // namespace

OptimizationResult nelder_mead(const ObjectiveFn& objective,
                               std::span<const double> theta0,
                               const OptimizerConfig& config) {
  const std::size_t dim = theta0.size();
  if (dim == 0) throw invariant_error("nelder_mead needs parameters");

  // Reflection/expansion/contraction/shrink factors; the adaptive variant
  // scales them with dimension, which helps high-dimensional searches.
  const double nd = static_cast<double>(dim);
  const double rho = 1.0;
  const double chi = config.adaptive ? 1.0 + 2.0 / nd : 2.0;
  const double psi = config.adaptive ? 0.75 - 1.0 / (2.0 * nd) : 0.5;
  const double sigma = config.adaptive ? 1.0 - 1.0 / nd : 0.5;

  BoundedObjective f{objective, config};
  OptimizationResult result;

  // Initial simplex: perturb one coordinate at a time (5% relative, small
  // absolute step at exact zeros).
  std::vector<std::vector<double>> sim(dim + 1,
                                       std::vector<double>(theta0.begin(),
                                                           theta0.end()));
  for (std::size_t k = 0; k < dim; ++k) {
    if (sim[k + 1][k] != 0.0)
      sim[k + 1][k] *= 1.05;
    else
      sim[k + 1][k] = 0.00025;
  }
  std::vector<double> fval(dim + 1);
  bool bad = false;
  fval[0] = f(sim[0]);
  if (!std::isfinite(fval[0])) bad = true;
  if (!bad && config.target_objective > 0.0 &&
      fval[0] <= config.target_objective) {
    // Already at tolerance: report the single evaluation and stop.
    push_trace(result, config, 0, fval[0], sim[0], f.evaluations);
    result.best_parameters = sim[0];
    result.best_value = fval[0];
    result.evaluations = f.evaluations;
    result.tolerance_met = true;
    return result;
  }
  for (std::size_t k = 1; k <= dim && !bad; ++k) {
    fval[k] = f(sim[k]);
    if (!std::isfinite(fval[k])) bad = true;
  }

  auto order = [&] {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) {
                       return fval[a] < fval[b];
                     });
    std::vector<std::vector<double>> s2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      s2[k] = sim[idx[k]];
      f2[k] = fval[idx[k]];
    }
    sim = std::move(s2);
    fval = std::move(f2);
  };
  order();

  std::int64_t iteration = 0;
  push_trace(result, config, iteration, fval[0], sim[0], f.evaluations);

  auto finish = [&](bool aborted) {
    result.best_parameters = sim[0];
    result.best_value = fval[0];
    result.evaluations = f.evaluations;
    result.aborted_non_finite = aborted;
    result.tolerance_met =
        config.target_objective > 0.0 && fval[0] <= config.target_objective;
    return result;
  };
  if (bad) return finish(true);

  while (f.evaluations < config.max_evaluations) {
    // Convergence: simplex collapsed in both parameters and values.
    double xspread = 0.0, fspread = 0.0;
    for (std::size_t k = 1; k <= dim; ++k) {
      fspread = std::max(fspread, std::abs(fval[k] - fval[0]));
      for (std::size_t i = 0; i < dim; ++i)
        xspread = std::max(xspread, std::abs(sim[k][i] - sim[0][i]));
    }
    if (xspread <= config.xatol && fspread <= config.fatol) break;
    if (config.target_objective > 0.0 && fval[0] <= config.target_objective)
      break;

    // Centroid of all but the worst vertex.
    std::vector<double> xbar(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i) xbar[i] += sim[k][i] / nd;

    auto affine = [&](double t) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i)
        x[i] = xbar[i] + t * (xbar[i] - sim[dim][i]);
      return x;
    };

    const auto xr = affine(rho);
    const double fr = f(xr);
    if (!std::isfinite(fr)) return finish(true);
    bool shrink = false;

    if (fr < fval[0]) {
      const auto xe = affine(rho * chi);
      const double fe = f(xe);
      if (!std::isfinite(fe)) return finish(true);
      if (fe < fr) {
        sim[dim] = xe;
        fval[dim] = fe;
      } else {
        sim[dim] = xr;
        fval[dim] = fr;
      }
    } else if (fr < fval[dim - 1]) {
      sim[dim] = xr;
      fval[dim] = fr;
    } else if (fr < fval[dim]) {
      // Outside contraction.
      const auto xc = affine(psi * rho);
      const double fc = f(xc);
      if (!std::isfinite(fc)) return finish(true);
      if (fc <= fr) {
        sim[dim] = xc;
        fval[dim] = fc;
      } else {
        shrink = true;
      }
    } else {
      // Inside contraction.
      const auto xc = affine(-psi);
      const double fc = f(xc);
      if (!std::isfinite(fc)) return finish(true);
      if (fc < fval[dim]) {
        sim[dim] = xc;
        fval[dim] = fc;
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      for (std::size_t k = 1; k <= dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i)
          sim[k][i] = sim[0][i] + sigma * (sim[k][i] - sim[0][i]);
        fval[k] = f(sim[k]);
        if (!std::isfinite(fval[k])) return finish(true);
      }
    }
    order();
    ++iteration;
    push_trace(result, config, iteration, fval[0], sim[0], f.evaluations);
  }
  return finish(false);
}

std::vector<double> fd_gradient(const ObjectiveFn& objective,
                                std::span<const double> theta, double h,
                                std::int64_t& evaluations) {
  if (h <= 0.0) throw invariant_error("fd_gradient needs h > 0");
  const double f0 = objective(theta);
  ++evaluations;
  if (!std::isfinite(f0))
    throw run_error("fd_gradient: non-finite objective at base point");
  std::vector<double> g(theta.size());
  std::vector<double> x(theta.begin(), theta.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double saved = x[j];
    x[j] = saved + h;
    const double fj = objective(x);
    ++evaluations;
    if (!std::isfinite(fj))
      throw run_error("fd_gradient: non-finite objective at probe point");
    g[j] = (fj - f0) / h;
    x[j] = saved;
  }
  return g;
}

OptimizationResult fd_gradient_descent(const ObjectiveFn& objective,
                                       std::span<const double> theta0,
                                       const OptimizerConfig& config) {
  BoundedObjective f{objective, config};
  OptimizationResult result;
  std::vector<double> x(theta0.begin(), theta0.end());
  auto wrapped = [&f](std::span<const double> t) { return f(t); };

  double best = f(x);
  if (!std::isfinite(best)) {
    result.aborted_non_finite = true;
    result.best_parameters = x;
    result.best_value = best;
    result.evaluations = f.evaluations;
    return result;
  }
  result.best_parameters = x;
  push_trace(result, config, 0, best, x, f.evaluations);
  if (config.target_objective > 0.0 && best <= config.target_objective) {
    result.best_value = best;
    result.evaluations = f.evaluations;
    result.tolerance_met = true;
    return result;
  }

  for (std::int64_t it = 0; it < config.max_iterations &&
                            f.evaluations < config.max_evaluations;
       ++it) {
    std::vector<double> g;
    try {
      g = fd_gradient(wrapped, x, config.fd_step, f.evaluations);
    } catch (const run_error&) {
      result.aborted_non_finite = true;
      break;
    }
    const double lr = config.learning_rate /
                      (1.0 + config.learning_rate_decay *
                                 static_cast<double>(it));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= lr * g[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      result.aborted_non_finite = true;
      break;
    }
    if (fx < best) {
      best = fx;
      result.best_parameters = x;
    }
    push_trace(result, config, it + 1, best, result.best_parameters,
               f.evaluations);
    if (config.target_objective > 0.0 && best <= config.target_objective)
      break;
    const double gnorm =
        std::sqrt(std::inner_product(g.begin(), g.end(), g.begin(), 0.0));
    if (gnorm <= config.fatol) break;
  }
  result.best_value = best;
  result.evaluations = f.evaluations;
  result.tolerance_met =
      config.target_objective > 0.0 && best <= config.target_objective;
  return result;
}

HybridResult hybrid_loop(const ControlProblem& problem,
                         const ControlField& initial, const TrotterPlan& plan,
                         const OptimizerConfig& config) {
  ControlField field = initial;
  const auto theta0 = field.parameters();
  ObjectiveFn objective = [&](std::span<const double> theta) {
    ControlField trial = field;
    trial.set_parameters(theta);
    return evaluate_objective(problem, trial, plan);
  };
  OptimizerConfig cfg = config;
  cfg.observable_terms =
      static_cast<std::int64_t>(problem.observable.size());
  OptimizationResult opt =
      cfg.method == OptimizerMethod::nelder_mead
          ? nelder_mead(objective, theta0, cfg)
          : fd_gradient_descent(objective, theta0, cfg);
  HybridResult out;
  out.best_field = field;
  out.best_field.set_parameters(opt.best_parameters);
  out.optimization = std::move(opt);
  return out;
}

void write_trace_csv(const std::string& path,
                     const OptimizationResult& result) {
  std::ofstream out(path);
  if (!out) throw run_error("cannot write trace CSV: " + path);
  out << std::setprecision(17);
  const std::size_t nparams =
      result.trace.empty() ? 0 : result.trace.front().parameters.size();
  out << "# iteration [1], J [objective], evals [count], "
         "modeled_measurements [count], theta_0.. [field parameters]\n";
  out << "iteration,J,evals,modeled_measurements";
  for (std::size_t i = 0; i < nparams; ++i) out << ",theta_" << i;
  out << '\n';
  for (const auto& row : result.trace) {
    out << row.iteration << ',' << row.best_value << ',' << row.evaluations
        << ',' << row.measurements;
    for (const double p : row.parameters) out << ',' << p;
    out << '\n';
  }
}

} // namespace qocsim
