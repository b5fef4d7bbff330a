#include "qocsim/models.hpp"

#include <cmath>

#include "qocsim/errors.hpp"
#include "qocsim/oracle.hpp"
#include "qocsim/units.hpp"

namespace qocsim {

namespace {

DenseMatrix pauli_x2() {
  DenseMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

DenseMatrix pauli_y2() {
  DenseMatrix y(2, 2);
  y << complexd{0, 0}, complexd{0, -1}, complexd{0, 1}, complexd{0, 0};
  return y;
}

DenseMatrix pauli_z2() {
  DenseMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

DenseMatrix identity2() { return DenseMatrix::Identity(2, 2); }

} // namespace

ControlProblem build_morse_hf() {
  // Morse oscillator for the HF bond, atomic units.
  const double mass = 1732.0;
  const double r_eq = 1.75;
  const double depth = 0.2101;
  const double alpha = 1.22;
  const double mu0 = 0.4541;
  const double beta = 0.0064;
  const double omega = alpha * std::sqrt(2.0 * depth / mass);
  const std::size_t d = 16, d_int = 128;

  ControlProblem p;
  p.name = "morse_hf";
  p.layout = RegisterLayout({d});

  const DenseMatrix kinetic = ho_kinetic(d, omega);
  const DenseMatrix potential = operator_function_of_position(
      [&](double r) {
        const double e = 1.0 - std::exp(-alpha * (r - r_eq));
        return depth * e * e - depth;
      },
      d, d_int, mass, omega, r_eq);
  const DenseMatrix dipole = operator_function_of_position(
      [&](double r) { return mu0 * r * std::exp(-beta * std::pow(r, 4)); },
      d, d_int, mass, omega, r_eq);

  const PauliSum drift =
      encode_hamiltonian({LocalTerm{{kinetic + potential}, {0}, 1.0}}, p.layout);
  const PauliSum control =
      encode_hamiltonian({LocalTerm{{dipole}, {0}, -1.0}}, p.layout);
  p.hamiltonian = DrivenHamiltonian::merge(drift, control);

  // Bond-coordinate observable r = (equilibrium) + (displacement).
  DenseMatrix robs = ho_position(d, mass, omega) +
                     r_eq * DenseMatrix::Identity(d, d);
  p.observable = encode_hamiltonian({LocalTerm{{robs}, {0}, 1.0}}, p.layout);
  p.objective = ObjectiveKind::target_expectation;
  p.target = 2.625;

  p.ensemble.push_back({StateVector::basis_state(p.layout.width(), 0), 1.0});
  p.total_time = units::fs_to_au(290.0);
  p.default_steps = 12083;

  // Cosine comb on the first four vibrational transition frequencies
  // omega_{v,v+1} = omega - omega^2 (v+1) / (2 depth).
  p.field_template.kind = FieldKind::cosine_comb;
  p.field_template.total_time = p.total_time;
  p.field_template.envelope_exponent = 2.0;
  for (int v = 0; v < 4; ++v) {
    p.field_template.base_frequency.push_back(
        omega - omega * omega * (v + 1) / (2.0 * depth));
    p.field_template.amplitude.push_back(0.0);
    p.field_template.detuning.push_back(0.0);
    p.field_template.phase.push_back(0.0);
  }
  return p;
}

ControlProblem build_coupled_rotors() {
  // Two planar OCS rotors, dipole-dipole coupled at R = 3 nm, field along
  // the x-axis. Lab units converted to hartree atomic units.
  const double b_rot = units::joule_to_hartree(4.03e-24);
  const double mu_cm = 2.36e-30; // C*m
  const double r12 = 3.0e-9;    // m
  const double k_dd = units::joule_to_hartree(
      mu_cm * mu_cm / (units::four_pi_epsilon0 * r12 * r12 * r12));
  // Dipole energy per unit field: mu * (1 V/m) in hartree per (V/m).
  const double mu_field = units::joule_to_hartree(mu_cm);
  const std::size_t m_max = 3;

  ControlProblem p;
  p.name = "rotors";
  p.layout = RegisterLayout({2 * m_max + 1, 2 * m_max + 1});

  const DenseMatrix l2 = rotor_l2(m_max);
  const DenseMatrix cosp = rotor_cos(m_max);
  const DenseMatrix sinp = rotor_sin(m_max);

  const PauliSum drift = encode_hamiltonian(
      {
          LocalTerm{{l2}, {0}, b_rot},
          LocalTerm{{l2}, {1}, b_rot},
          LocalTerm{{cosp, cosp}, {0, 1}, k_dd},
          LocalTerm{{sinp, sinp}, {0, 1}, -2.0 * k_dd},
      },
      p.layout);
  const PauliSum control = encode_hamiltonian(
      {
          LocalTerm{{cosp}, {0}, -mu_field},
          LocalTerm{{cosp}, {1}, -mu_field},
      },
      p.layout);
  p.hamiltonian = DrivenHamiltonian::merge(drift, control);

  p.observable = encode_hamiltonian(
      {
          LocalTerm{{cosp}, {0}, 1.0},
          LocalTerm{{cosp}, {1}, 1.0},
      },
      p.layout);
  p.objective = ObjectiveKind::normalized_maximum;
  p.normalization = spectral_norm(reconstruct(p.observable));

  // Both rotors start in the m = 0 angular momentum ground state.
  p.ensemble.push_back(
      {StateVector::basis_state(p.layout.width(),
                                p.layout.basis_index({m_max, m_max})),
       1.0});
  p.total_time = units::ns_to_au(1.31);
  p.default_steps = 700;

  // Microwave comb over the m -> m+1 transition ladder: splittings are
  // b_rot * (2m+1), used here with multiplicities (4, 3, 3).
  p.field_template.kind = FieldKind::cosine_comb;
  p.field_template.total_time = p.total_time;
  p.field_template.envelope_exponent = 2.0;
  const double harmonics[10] = {1, 1, 1, 1, 3, 3, 3, 5, 5, 5};
  for (const double h : harmonics) {
    p.field_template.base_frequency.push_back(b_rot * h);
    p.field_template.amplitude.push_back(0.0);
    p.field_template.detuning.push_back(0.0);
    p.field_template.phase.push_back(0.0);
  }
  return p;
}

ControlProblem build_fmo_dimer() {
  // Chromophores 3 and 4 of the FMO complex in a rotating frame at the
  // drive carrier, plus one 8-level vibrational mode on chromophore 4.
  const double e3 = units::wavenumber_to_hartree(5.0);
  const double e4 = units::wavenumber_to_hartree(-65.0);
  const double j34 = units::wavenumber_to_hartree(53.5);
  const double nu = units::wavenumber_to_hartree(180.0);
  const double j4v = units::wavenumber_to_hartree(84.4);
  const double mu3 = 0.32 * 6.3 * units::debye_atomic;
  const double mu4 = 0.92 * 6.3 * units::debye_atomic;
  const std::size_t d_vib = 8;

  ControlProblem p;
  p.name = "fmo";
  p.layout = RegisterLayout({2, 2, d_vib});

  const DenseMatrix x = pauli_x2(), y = pauli_y2(), z = pauli_z2();
  // Two-level site operators: number operator |e><e| maps to -Z/2 up to an
  // identity shift that is dropped (it only offsets the zero of energy).
  const DenseMatrix site_number = -0.5 * z;
  const DenseMatrix a_vib = ho_lowering(d_vib);
  const DenseMatrix n_vib = ho_number(d_vib);
  const DenseMatrix x_vib = a_vib + a_vib.adjoint();

  const PauliSum drift = encode_hamiltonian(
      {
          LocalTerm{{site_number}, {0}, e3},
          LocalTerm{{site_number}, {1}, e4},
          LocalTerm{{x, x}, {0, 1}, 0.5 * j34},
          LocalTerm{{y, y}, {0, 1}, 0.5 * j34},
          LocalTerm{{n_vib}, {2}, nu},
          LocalTerm{{site_number, x_vib}, {1, 2}, j4v},
      },
      p.layout);
  const PauliSum control = encode_hamiltonian(
      {
          LocalTerm{{x}, {0}, mu3},
          LocalTerm{{x}, {1}, mu4},
      },
      p.layout);
  p.hamiltonian = DrivenHamiltonian::merge(drift, control);

  // Target: the exciton on chromophore 4, i.e. |g><g| (x) |e><e| on the
  // chromophore qubits, identity on the mode.
  const DenseMatrix i2 = identity2();
  const DenseMatrix proj_g = 0.5 * (i2 + z);
  const DenseMatrix proj_e = 0.5 * (i2 - z);
  p.observable = encode_hamiltonian(
      {LocalTerm{{proj_g, proj_e}, {0, 1}, 1.0}}, p.layout);
  p.objective = ObjectiveKind::projection;

  const auto weights = thermal_weights(180.0, 300.0, d_vib);
  for (std::size_t v = 0; v < d_vib; ++v)
    p.ensemble.push_back(
        {StateVector::basis_state(p.layout.width(),
                                  p.layout.basis_index({0, 0, v})),
         weights[v]});
  p.total_time = units::fs_to_au(508.0);
  p.default_steps = 300;

  p.field_template.kind = FieldKind::gaussian_comb;
  p.field_template.total_time = p.total_time;
  p.field_template.envelope_exponent = 2.0;
  const std::size_t components = 10;
  for (std::size_t j = 0; j < components; ++j) {
    p.field_template.amplitude.push_back(0.0);
    p.field_template.center.push_back(
        0.08 + 0.84 * static_cast<double>(j) /
                   static_cast<double>(components - 1));
    p.field_template.width.push_back(0.08);
  }
  return p;
}

ControlProblem build_model(const std::string& name) {
  if (name == "morse_hf") return build_morse_hf();
  if (name == "rotors") return build_coupled_rotors();
  if (name == "fmo") return build_fmo_dimer();
  throw config_error("unknown model '" + name +
                     "' (expected morse_hf, rotors, or fmo)");
}

std::vector<double> thermal_weights(double nu_wavenumber, double temperature,
                                    std::size_t count) {
  if (count == 0) throw invariant_error("thermal_weights needs count > 0");
  const double ratio =
      nu_wavenumber / (units::boltzmann_wavenumber * temperature);
  std::vector<double> w(count);
  double z = 0.0;
  for (std::size_t v = 0; v < count; ++v) {
    w[v] = std::exp(-ratio * static_cast<double>(v));
    z += w[v];
  }
  for (auto& x : w) x /= z;
  return w;
}

double member_objective(const ControlProblem& problem, double expectation) {
  switch (problem.objective) {
    case ObjectiveKind::target_expectation: {
      const double d = expectation - problem.target;
      return d * d;
    }
    case ObjectiveKind::normalized_maximum:
      return 1.0 - expectation / problem.normalization;
    case ObjectiveKind::projection:
      return 1.0 - expectation;
  }
  throw invariant_error("invalid objective kind");
}

ObjectiveBreakdown evaluate_objective_detail(const ControlProblem& problem,
                                             std::span<const double> field,
                                             const TrotterPlan& plan) {
  ObjectiveBreakdown out;
  DenseMatrix g0, gc;
  if (plan.order == 0) {
    g0 = reconstruct(problem.hamiltonian.drift());
    gc = reconstruct(problem.hamiltonian.control());
  }
  for (const auto& member : problem.ensemble) {
    StateVector psi = member.state;
    if (plan.order == 0)
      exact_evolve(psi, g0, gc, field, plan.dt);
    else
      evolve(psi, problem.hamiltonian, field, plan);
    const double j = member_objective(problem, expectation(psi, problem.observable));
    out.member_values.push_back(j);
    out.total += member.weight * j;
  }
  return out;
}

double evaluate_objective(const ControlProblem& problem,
                          std::span<const double> field,
                          const TrotterPlan& plan) {
  return evaluate_objective_detail(problem, field, plan).total;
}

double evaluate_objective(const ControlProblem& problem,
                          const ControlField& field, const TrotterPlan& plan) {
  const auto samples =
      sample_field(field, plan.dt, plan.n_steps, plan.midpoint_sampling);
  return evaluate_objective(problem, samples, plan);
}

double objective_error(const ControlProblem& problem,
                       std::span<const double> field, const TrotterPlan& plan) {
  TrotterPlan exact = plan;
  exact.order = 0;
  return std::abs(evaluate_objective(problem, field, plan) -
                  evaluate_objective(problem, field, exact));
}

} // namespace qocsim
