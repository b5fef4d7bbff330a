// Command-line front end: config-driven sweeps, table validation, field
// optimization, resource estimation, and field evaluation with CSV output.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qocsim/config.hpp"
#include "qocsim/errors.hpp"
#include "qocsim/models.hpp"
#include "qocsim/optimize.hpp"
#include "qocsim/oracle.hpp"
#include "qocsim/resources.hpp"
#include "qocsim/sweep.hpp"
#include "qocsim/validate.hpp"

namespace {

using namespace qocsim;

struct GlobalArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t seed = -1; // <0: take [run] seed from the config
  int workers = 0;        // 0: take [run] workers from the config
};

std::string sanitize_name(const std::string& name) {
  std::string out = name;
  for (char& c : out)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return out;
}

// Model selector: a built-in problem name or "appendix_data:<table file>",
// which wraps a coefficient table as a bare propagation problem (first
// column drift, optional second column control).
ControlProblem problem_from_config(const Config& cfg) {
  const std::string name = cfg.get("model", "name");
  const std::string prefix = "appendix_data:";
  if (name.rfind(prefix, 0) != 0) return build_model(name);

  const auto table = load_coefficient_table(name.substr(prefix.size()));
  const std::size_t width = table.ops.front().width();
  PauliSum drift(width), control(width);
  for (std::size_t r = 0; r < table.ops.size(); ++r) {
    drift.add(table.ops[r], table.values[r][0]);
    if (table.values[r].size() > 1)
      control.add(table.ops[r], table.values[r][1]);
  }

  ControlProblem problem;
  problem.name = "appendix_data_" + table.name;
  problem.layout = RegisterLayout(std::vector<std::size_t>(width, 2));
  problem.hamiltonian = DrivenHamiltonian::merge(drift, control);
  problem.observable = PauliSum(width);
  problem.observable.add(table.ops.front(), 1.0);
  problem.objective = ObjectiveKind::target_expectation;
  problem.target = 0.0;
  problem.ensemble.push_back({StateVector::basis_state(width, 0), 1.0});
  problem.field_template.kind = FieldKind::cosine_comb;
  problem.field_template.base_frequency = {0.0};
  problem.field_template.amplitude = {0.0};
  problem.field_template.detuning = {0.0};
  problem.field_template.phase = {0.0};
  return problem;
}

TrotterPlan plan_from_config(const Config& cfg, ControlProblem& problem) {
  TrotterPlan plan;
  plan.order = static_cast<int>(cfg.get_int_or("plan", "order", 2));
  plan.n = cfg.get_int_or("plan", "n", 1);
  plan.n_steps = cfg.get_int_or("plan", "n_steps", problem.default_steps);
  if (plan.n_steps < 1)
    throw config_error("[plan] n_steps must be >= 1 (no model default)");
  if (plan.n < 1) throw config_error("[plan] n must be >= 1");
  const double default_dt =
      problem.total_time > 0.0
          ? problem.total_time / static_cast<double>(plan.n_steps)
          : 0.0;
  plan.dt = cfg.get_double_or("plan", "dt", default_dt);
  if (plan.dt <= 0.0) throw config_error("[plan] dt must be > 0");
  plan.midpoint_sampling = cfg.get_bool_or("plan", "midpoint", false);
  if (problem.total_time <= 0.0) {
    // Bare appendix-data problems take their horizon from the plan.
    problem.total_time = plan.dt * static_cast<double>(plan.n_steps);
    problem.field_template.total_time = problem.total_time;
  }
  return plan;
}

void apply_init_list(const Config& cfg, const std::string& key,
                     std::vector<double>& target,
                     const std::string& what) {
  if (!cfg.has("init", key)) return;
  auto values = cfg.get_double_list("init", key);
  if (values.size() != target.size())
    throw config_error("[init] " + key + ": expected " +
                       std::to_string(target.size()) + " values for " + what);
  target = std::move(values);
}

ControlField field_from_config(const Config& cfg,
                               const ControlProblem& problem) {
  const std::string source = cfg.get_or("field", "source", "template");
  if (source == "fixture") {
    const std::string path = cfg.get("field", "fixture");
    ControlField field = load_field(path);
    const double tol = 1e-6 * std::max(1.0, problem.total_time);
    if (std::abs(field.total_time - problem.total_time) > tol)
      throw config_error("fixture horizon " +
                         std::to_string(field.total_time) +
                         " does not match the model horizon " +
                         std::to_string(problem.total_time));
    return field;
  }
  if (source != "template")
    throw config_error("[field] source must be template or fixture");
  ControlField field = problem.field_template;
  apply_init_list(cfg, "amplitudes", field.amplitude, "the field template");
  if (field.kind == FieldKind::cosine_comb) {
    apply_init_list(cfg, "detunings", field.detuning, "the field template");
    apply_init_list(cfg, "phases", field.phase, "the field template");
  } else {
    apply_init_list(cfg, "centers", field.center, "the field template");
    apply_init_list(cfg, "widths", field.width, "the field template");
  }
  return field;
}

int effective_workers(const Config& cfg, const GlobalArgs& args) {
  const int w = args.workers > 0
                    ? args.workers
                    : static_cast<int>(cfg.get_int_or("run", "workers", 1));
  if (w < 1) throw config_error("[run] workers must be >= 1");
  return w;
}

std::uint64_t effective_seed(const Config& cfg, const GlobalArgs& args) {
  if (args.seed >= 0) return static_cast<std::uint64_t>(args.seed);
  const std::int64_t s = cfg.get_int_or("run", "seed", 0);
  if (s < 0) throw config_error("[run] seed must be >= 0");
  return static_cast<std::uint64_t>(s);
}

int cmd_trotter_sweep(const Config& cfg, const GlobalArgs& args) {
  ControlProblem problem = problem_from_config(cfg);
  const TrotterPlan plan = plan_from_config(cfg, problem);

  std::vector<int> orders{1, 2, 4};
  if (cfg.has("plan", "orders")) {
    orders.clear();
    for (const auto o : cfg.get_int_list("plan", "orders"))
      orders.push_back(static_cast<int>(o));
  }
  std::vector<std::int64_t> ns{2, 4, 8, 16, 32};
  if (cfg.has("plan", "trotter_numbers"))
    ns = cfg.get_int_list("plan", "trotter_numbers");

  const ControlField field = field_from_config(cfg, problem);
  const auto samples =
      sample_field(field, plan.dt, plan.n_steps, plan.midpoint_sampling);
  const SweepResult result = run_trotter_sweep(
      problem, samples, plan, orders, ns, effective_workers(cfg, args));

  const std::string path =
      args.out_dir + "/trotter_sweep_" + sanitize_name(problem.name) + ".csv";
  write_sweep_csv(path, result);

  std::cout << "trotter-sweep: " << result.points.size() << " grid points, L="
            << result.terms << ", Lambda=" << result.lambda << "\n";
  for (const auto& [order, slope] : result.slopes)
    std::cout << "  order " << order << ": fitted slope " << slope << "\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_validate_appendix(const Config& cfg, const GlobalArgs& args) {
  const std::string data_dir = cfg.get_or("validate", "data_dir", "data");
  const AppendixReport report = validate_appendix(data_dir);
  const std::string path = args.out_dir + "/validation_report.txt";
  write_validation_report(path, report);
  for (const auto& t : report.tables) {
    std::cout << "[" << t.table << ":" << t.column << "] " << t.matched << "/"
              << t.entries << " mode=" << t.mode << " scale=" << t.scale
              << " max_residual=" << t.max_residual
              << (t.pass ? " pass" : " FAIL");
    if (!t.itemized.empty()) {
      std::cout << " itemized:";
      for (const auto& s : t.itemized) std::cout << " " << s;
    }
    std::cout << "\n";
  }
  std::cout << "wrote " << path << "\n";
  return report.all_pass ? 0 : 3;
}

OptimizerConfig optimizer_from_config(const Config& cfg,
                                      const ControlProblem& problem,
                                      std::uint64_t seed) {
  OptimizerConfig ocfg;
  const std::string method =
      cfg.get_or("optimize", "method", "nelder_mead");
  if (method == "nelder_mead")
    ocfg.method = OptimizerMethod::nelder_mead;
  else if (method == "fd_gradient")
    ocfg.method = OptimizerMethod::fd_gradient_descent;
  else
    throw config_error(
        "[optimize] method must be nelder_mead or fd_gradient");
  ocfg.max_evaluations =
      cfg.get_int_or("optimize", "max_evaluations", ocfg.max_evaluations);
  ocfg.xatol = cfg.get_double_or("optimize", "xatol", ocfg.xatol);
  ocfg.fatol = cfg.get_double_or("optimize", "fatol", ocfg.fatol);
  ocfg.adaptive = cfg.get_bool_or("optimize", "adaptive", ocfg.adaptive);
  ocfg.target_objective =
      cfg.get_double_or("optimize", "target_objective", 0.0);
  ocfg.fd_step = cfg.get_double_or("optimize", "fd_step", ocfg.fd_step);
  ocfg.learning_rate =
      cfg.get_double_or("optimize", "learning_rate", ocfg.learning_rate);
  ocfg.learning_rate_decay = cfg.get_double_or(
      "optimize", "learning_rate_decay", ocfg.learning_rate_decay);
  ocfg.max_iterations =
      cfg.get_int_or("optimize", "max_iterations", ocfg.max_iterations);
  if (cfg.has("optimize", "lower"))
    ocfg.lower = cfg.get_double_list("optimize", "lower");
  if (cfg.has("optimize", "upper"))
    ocfg.upper = cfg.get_double_list("optimize", "upper");
  ocfg.seed = seed;
  ocfg.observable_terms =
      static_cast<std::int64_t>(problem.observable.size());
  return ocfg;
}

int cmd_optimize(const Config& cfg, const GlobalArgs& args) {
  ControlProblem problem = problem_from_config(cfg);
  const TrotterPlan plan = plan_from_config(cfg, problem);
  const ControlField field0 = field_from_config(cfg, problem);
  const std::uint64_t seed = effective_seed(cfg, args);
  const OptimizerConfig ocfg = optimizer_from_config(cfg, problem, seed);

  const std::int64_t trials = cfg.get_int_or("optimize", "trials", 1);
  const double jitter = cfg.get_double_or("optimize", "jitter", 0.0);
  if (trials < 1) throw config_error("[optimize] trials must be >= 1");

  HybridResult best;
  bool have_best = false;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    ControlField start = field0;
    if (trial > 0 && jitter > 0.0) {
      // Deterministic multi-start: relative jitter on the initial point.
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      auto theta = start.parameters();
      for (double& v : theta) v *= 1.0 + jitter * u(rng);
      start.set_parameters(theta);
    }
    HybridResult res = hybrid_loop(problem, start, plan, ocfg);
    if (!have_best || (!res.optimization.aborted_non_finite &&
                       res.optimization.best_value <
                           best.optimization.best_value)) {
      best = std::move(res);
      have_best = true;
    }
    if (best.optimization.tolerance_met) break;
  }

  const std::string stem = args.out_dir + "/" + sanitize_name(problem.name);
  save_field(best.best_field, stem + "_field.txt");
  write_trace_csv(stem + "_trace.csv", best.optimization);

  if (problem.ensemble.size() > 1) {
    // Ensemble problems: log the per-member objective breakdown too.
    const auto samples = sample_field(best.best_field, plan.dt, plan.n_steps,
                                      plan.midpoint_sampling);
    const auto detail = evaluate_objective_detail(problem, samples, plan);
    std::ofstream out(stem + "_members.csv");
    if (!out) throw run_error("cannot write members CSV");
    out << std::setprecision(17);
    out << "# columns: member [1], weight [1], J_member [1]\n";
    out << "member,weight,J_member\n";
    for (std::size_t v = 0; v < detail.member_values.size(); ++v)
      out << v << ',' << problem.ensemble[v].weight << ','
          << detail.member_values[v] << '\n';
  }

  const auto& opt = best.optimization;
  std::cout << "optimize: J=" << opt.best_value << " evaluations="
            << opt.evaluations << " measurements="
            << opt.evaluations * ocfg.observable_terms << " tolerance_met="
            << (opt.tolerance_met ? "yes" : "no") << "\n";
  std::cout << "wrote " << stem << "_field.txt, " << stem << "_trace.csv\n";
  if (opt.aborted_non_finite) {
    std::cerr << "optimize: aborted on a non-finite objective value\n";
    return 4;
  }
  if (ocfg.target_objective > 0.0 && !opt.tolerance_met) return 3;
  return 0;
}

int cmd_resources(const Config& cfg, const GlobalArgs& args) {
  std::vector<std::int64_t> cs{1, 2, 3, 4, 5, 6, 7};
  std::vector<std::int64_t> ms{0, 1, 2};
  std::vector<std::int64_t> ds{8};
  if (cfg.has("resources", "chromophores"))
    cs = cfg.get_int_list("resources", "chromophores");
  if (cfg.has("resources", "modes"))
    ms = cfg.get_int_list("resources", "modes");
  if (cfg.has("resources", "levels"))
    ds = cfg.get_int_list("resources", "levels");
  const double lambda = cfg.get_double_or("resources", "lambda_max", 0.01);
  const double dt = cfg.get_double_or("resources", "dt", 10.0);
  const double epsilon = cfg.get_double_or("resources", "epsilon", 1e-5);

  const std::string path = args.out_dir + "/resources_sweep.csv";
  std::ofstream out(path);
  if (!out) throw run_error("cannot write resources CSV: " + path);
  out << std::setprecision(17);
  out << "# Scaling sweep for the chromophore-network family; depth bound at "
         "Lambda_max="
      << lambda << ", dt=" << dt << " au, epsilon=" << epsilon << "\n";
  out << "# columns: C [chromophores], M [modes per chromophore], d [mode "
         "levels], N [qubits], L [Pauli strings], depth_bound [exponential "
         "applications], status\n";
  out << "C,M,d,N,L,depth_bound,status\n";
  std::size_t rows = 0, errors = 0;
  for (const auto c : cs)
    for (const auto m : ms)
      for (const auto d : ds) {
        out << c << ',' << m << ',' << d << ',';
        try {
          const auto n = fmo_qubit_count(static_cast<int>(c),
                                         static_cast<int>(m),
                                         static_cast<int>(d));
          const auto l =
              fmo_term_count(static_cast<int>(c), static_cast<int>(m));
          const double depth =
              depth_upper_bound_pf4(static_cast<int>(c), static_cast<int>(m),
                                    static_cast<int>(d), lambda, dt, epsilon);
          out << n << ',' << l << ',' << depth << ",ok\n";
        } catch (const config_error& e) {
          // Bad grid point (e.g. d not a power of two): row-level error.
          out << ",,,error: " << e.what() << "\n";
          ++errors;
        }
        ++rows;
      }
  std::cout << "resources: " << rows << " grid rows (" << errors
            << " errors), wrote " << path << "\n";
  (void)args;
  return 0;
}

int cmd_field_eval(const Config& cfg, const GlobalArgs& args) {
  ControlProblem problem = problem_from_config(cfg);
  const TrotterPlan plan = plan_from_config(cfg, problem);
  const ControlField field = field_from_config(cfg, problem);
  const auto samples =
      sample_field(field, plan.dt, plan.n_steps, plan.midpoint_sampling);

  const std::string path =
      args.out_dir + "/field_" + sanitize_name(problem.name) + ".csv";
  std::ofstream out(path);
  if (!out) throw run_error("cannot write field CSV: " + path);
  out << std::setprecision(17);
  out << "# Field samples on the plan grid ("
      << (plan.midpoint_sampling ? "midpoint" : "left-endpoint")
      << " sampling)\n";
  out << "# columns: step [1], t [au], f [model field units]\n";
  out << "step,t,f\n";
  const double offset = plan.midpoint_sampling ? 0.5 : 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k)
    out << k << ',' << (static_cast<double>(k) + offset) * plan.dt << ','
        << samples[k] << '\n';
  std::cout << "field-eval: " << samples.size() << " samples, wrote " << path
            << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Config-driven simulation toolkit for Pauli-encoded molecular "
               "control problems"};
  app.require_subcommand(1);

  GlobalArgs args;
  app.add_option("--config", args.config_path, "INI config file")->required();
  app.add_option("--out", args.out_dir, "output directory (created)");
  app.add_option("--seed", args.seed, "override [run] seed");
  app.add_option("--workers", args.workers, "override [run] workers");

  auto* sweep_cmd = app.add_subcommand(
      "trotter-sweep", "measured vs bounded Trotter error over (order, n)");
  auto* validate_cmd = app.add_subcommand(
      "validate-appendix", "check shipped coefficient tables");
  auto* optimize_cmd =
      app.add_subcommand("optimize", "run the hybrid optimization loop");
  auto* resources_cmd =
      app.add_subcommand("resources", "scaling and depth-bound sweep");
  auto* field_cmd =
      app.add_subcommand("field-eval", "tabulate field samples on the grid");
  for (auto* sub :
       {sweep_cmd, validate_cmd, optimize_cmd, resources_cmd, field_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Config cfg = Config::load(args.config_path);
    std::filesystem::create_directories(args.out_dir);
    std::cout << std::setprecision(10);
    if (*sweep_cmd) return cmd_trotter_sweep(cfg, args);
    if (*validate_cmd) return cmd_validate_appendix(cfg, args);
    if (*optimize_cmd) return cmd_optimize(cfg, args);
    if (*resources_cmd) return cmd_resources(cfg, args);
    if (*field_cmd) return cmd_field_eval(cfg, args);
    std::cerr << "no command selected\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
