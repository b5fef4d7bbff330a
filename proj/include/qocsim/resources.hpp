#ifndef QOCSIM_RESOURCES_HPP
#define QOCSIM_RESOURCES_HPP

// Gate-level compilation of Pauli exponentials and closed-form resource
// estimates for the chromophore-network model family.

#include <cstdint>
#include <vector>

#include "qocsim/pauli.hpp"
#include "qocsim/statevector.hpp"

namespace qocsim {

enum class GateKind {
  hadamard,     // X-basis change
  basis_y,      // H S^dag, Y-basis change
  basis_y_dag,  // S H, inverse Y-basis change
  rz,           // exp(-i angle Z / 2)
  cnot,
};

struct Gate {
  GateKind kind = GateKind::hadamard;
  int site = 0;    // acted qubit (control for cnot)
  int target = 0;  // cnot target, unused otherwise
  double angle = 0.0;
};

// Circuit for exp(-i theta P): basis changes, a CNOT parity ladder onto the
// last support qubit, one Rz(2 theta), and the mirrored uncomputation. An
// identity string compiles to a bare global phase with no gates.
struct CompiledExponential {
  int width = 0;
  std::vector<Gate> gates;
  double global_phase = 0.0;  // circuit unitary carries exp(i global_phase)
  std::int64_t cnot_count = 0;
  std::int64_t rotation_count = 0;
  std::int64_t basis_change_count = 0;
};

CompiledExponential compile_pauli_exponential(const PauliString& op,
                                              double theta);

// Applies the compiled circuit (including its global phase) to a state.
void apply_compiled(const CompiledExponential& circuit, StateVector& state);

// Dense unitary of the compiled circuit, for verification at small widths.
DenseMatrix compiled_unitary(const CompiledExponential& circuit);

// Closed-form counts for a network of C chromophores, each a two-level system
// coupled to M local vibrational modes truncated at d levels (d a power of
// two). Qubits: (M log2(d) + 1) C. Encoded Hamiltonian strings: (1 + C + 20M) C.
std::int64_t fmo_qubit_count(int chromophores, int modes, int levels);
std::int64_t fmo_term_count(int chromophores, int modes);

// Fourth-order product-formula depth bound (in single-Pauli-exponential
// applications) for one time step of length dt pushed to accuracy epsilon,
// with the term count taken from fmo_term_count(chromophores, modes).
double depth_upper_bound_pf4(int chromophores, int modes, int levels,
                             double lambda_max, double dt, double epsilon);

} // namespace qocsim

#endif // QOCSIM_RESOURCES_HPP
