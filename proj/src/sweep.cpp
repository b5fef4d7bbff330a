#include "qocsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <thread>

#include "qocsim/errors.hpp"
#include "qocsim/oracle.hpp"

namespace qocsim {

namespace {

double objective_from_propagator(const ControlProblem& problem,
                                 const DenseMatrix& u) {
  double j = 0.0;
  for (const auto& member : problem.ensemble) {
    const DenseVector final_state = u * member.state.to_eigen();
    const StateVector psi =
        StateVector::from_eigen(member.state.width(), final_state);
    j += member.weight *
         member_objective(problem, expectation(psi, problem.observable));
  }
  return j;
}

} // namespace

SweepResult run_trotter_sweep(const ControlProblem& problem,
                              std::span<const double> field,
                              const TrotterPlan& base,
                              std::span<const int> orders,
                              std::span<const std::int64_t> trotter_numbers,
                              int workers) {
  if (orders.empty() || trotter_numbers.empty())
    throw config_error("trotter sweep: empty order or n list");
  if (static_cast<std::int64_t>(field.size()) != base.n_steps)
    throw invariant_error("trotter sweep: field samples != n_steps");
  for (const int o : orders)
    if (o != 1 && (o < 2 || o % 2 != 0))
      throw config_error("trotter sweep: order must be 1 or even");
  for (const std::int64_t n : trotter_numbers)
    if (n < 1) throw config_error("trotter sweep: n must be >= 1");

  SweepResult result;
  result.lambda = problem.hamiltonian.lambda_max(field);
  result.terms = problem.hamiltonian.term_count();

  const DenseMatrix g0 = reconstruct(problem.hamiltonian.drift());
  const DenseMatrix gc = reconstruct(problem.hamiltonian.control());
  const DenseMatrix u_exact = exact_propagator(g0, gc, field, base.dt);
  const double j_exact = objective_from_propagator(problem, u_exact);

  for (const int o : orders)
    for (const std::int64_t n : trotter_numbers)
      result.points.push_back({o, n, 0.0, 0.0, 0.0});

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= result.points.size()) return;
      try {
        SweepPoint& pt = result.points[i];
        TrotterPlan plan = base;
        plan.order = pt.order;
        plan.n = pt.n;
        const DenseMatrix u_pf =
            pf_propagator(problem.hamiltonian, field, plan);
        pt.measured_error = spectral_norm(u_pf - u_exact);
        pt.objective_error =
            std::abs(objective_from_propagator(problem, u_pf) - j_exact);
        pt.error_bound =
            pt.order == 1
                ? error_bound_pf1(base.n_steps, result.terms, result.lambda,
                                  base.dt, pt.n)
                : error_bound_pf2p(base.n_steps, result.terms, result.lambda,
                                   base.dt, pt.n, pt.order / 2);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int pool = std::max(
      1, std::min<int>(workers, static_cast<int>(result.points.size())));
  if (pool == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int k = 0; k < pool; ++k) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Per-order least-squares slope of log(measured error) vs log(n).
  for (const int o : orders) {
    std::vector<double> xs, ys;
    for (const auto& pt : result.points) {
      if (pt.order != o || pt.measured_error <= 0.0) continue;
      xs.push_back(std::log(static_cast<double>(pt.n)));
      ys.push_back(std::log(pt.measured_error));
    }
    if (xs.size() < 2) continue;
    double xm = 0.0, ym = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      xm += xs[k];
      ym += ys[k];
    }
    xm /= static_cast<double>(xs.size());
    ym /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      num += (xs[k] - xm) * (ys[k] - ym);
      den += (xs[k] - xm) * (xs[k] - xm);
    }
    result.slopes.emplace_back(o, num / den);
  }
  return result;
}

void write_sweep_csv(const std::string& path, const SweepResult& result) {
  std::ofstream out(path);
  if (!out) throw run_error("cannot write sweep CSV: " + path);
  out << std::setprecision(17);
  out << "# Trotter-number convergence sweep; L=" << result.terms
      << " terms, Lambda=" << result.lambda << "\n";
  out << "# columns: order [1], n [1], measured_error [operator norm], "
         "objective_error [1], error_bound [operator norm]\n";
  out << "# footer: order, 'slope', fitted log-log slope of measured_error "
         "vs n\n";
  out << "order,n,measured_error,objective_error,error_bound\n";
  for (const auto& pt : result.points)
    out << pt.order << ',' << pt.n << ',' << pt.measured_error << ','
        << pt.objective_error << ',' << pt.error_bound << '\n';
  for (const auto& [order, slope] : result.slopes)
    out << order << ",slope," << slope << ",,\n";
}

} // namespace qocsim
