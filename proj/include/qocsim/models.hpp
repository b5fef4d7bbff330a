#ifndef QOCSIM_MODELS_HPP
#define QOCSIM_MODELS_HPP

#include <string>
#include <vector>

#include "qocsim/encoding.hpp"
#include "qocsim/field.hpp"
#include "qocsim/pauli.hpp"
#include "qocsim/statevector.hpp"
#include "qocsim/trotter.hpp"

namespace qocsim {

enum class ObjectiveKind {
  target_expectation,  // J = (<O> - target)^2
  normalized_maximum,  // J = 1 - <O>/normalization
  projection,          // J = 1 - <O> (O a projector), ensemble-averaged
};

struct EnsembleMember {
  StateVector state;
  double weight = 1.0;
};

// A fully specified control problem: encoded Hamiltonian, objective
// observable, initial state(s), horizon, and the control-field ansatz
// template (base frequencies structural, amplitudes zeroed).
struct ControlProblem {
  std::string name;
  RegisterLayout layout;
  DrivenHamiltonian hamiltonian;
  PauliSum observable;
  ObjectiveKind objective = ObjectiveKind::target_expectation;
  double target = 0.0;        // target_expectation
  double normalization = 1.0; // normalized_maximum
  std::vector<EnsembleMember> ensemble;
  double total_time = 0.0;
  std::int64_t default_steps = 0;
  ControlField field_template;
};

// Controlled bond stretching of an HF Morse oscillator on 4 qubits (16
// vibrational levels, spectral calculus on 128 levels).
ControlProblem build_morse_hf();

// Controlled orientation of two dipole-dipole coupled planar OCS rotors,
// 7 angular momentum levels each, on 3+3 qubits.
ControlProblem build_coupled_rotors();

// Controlled exciton-state preparation in an FMO chromophore dimer with one
// thermally populated 8-level vibrational mode, on 1+1+3 qubits.
ControlProblem build_fmo_dimer();

ControlProblem build_model(const std::string& name);

// Boltzmann weights exp(-v*nu/(kB*T)) / Z for v = 0..count-1, nu in cm^-1,
// temperature in kelvin.
std::vector<double> thermal_weights(double nu_wavenumber, double temperature,
                                    std::size_t count);

// Member objective from a final-state expectation value of the observable.
double member_objective(const ControlProblem& problem, double expectation);

struct ObjectiveBreakdown {
  double total = 0.0;
  std::vector<double> member_values;
};

// Weighted objective after evolving every ensemble member under the field
// samples. plan.order == 0 selects the dense exact propagator instead of a
// product formula.
ObjectiveBreakdown evaluate_objective_detail(const ControlProblem& problem,
                                             std::span<const double> field,
                                             const TrotterPlan& plan);
double evaluate_objective(const ControlProblem& problem,
                          std::span<const double> field,
                          const TrotterPlan& plan);

// Convenience: sample the control field on the plan grid, then evaluate.
double evaluate_objective(const ControlProblem& problem,
                          const ControlField& field, const TrotterPlan& plan);

// |J_plan - J_exact| for the same field samples.
double objective_error(const ControlProblem& problem,
                       std::span<const double> field, const TrotterPlan& plan);

} // namespace qocsim

#endif
