#include "qocsim/resources.hpp"

#include <cmath>

#include "qocsim/errors.hpp"

namespace qocsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd h;
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return h;
}

// H S^dag: maps the Y eigenbasis onto the Z eigenbasis, V Y V^dag = Z.
Eigen::Matrix2cd basis_y_matrix() {
  Eigen::Matrix2cd v;
  v << complexd(kInvSqrt2, 0.0), complexd(0.0, -kInvSqrt2),
      complexd(kInvSqrt2, 0.0), complexd(0.0, kInvSqrt2);
  return v;
}

Eigen::Matrix2cd rz_matrix(double angle) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  r(0, 0) = std::exp(complexd(0.0, -0.5 * angle));
  r(1, 1) = std::exp(complexd(0.0, 0.5 * angle));
  return r;
}

} // namespace

CompiledExponential compile_pauli_exponential(const PauliString& op,
                                              double theta) {
  CompiledExponential circuit;
  circuit.width = static_cast<int>(op.width());

  std::vector<int> support;
  int n_xy = 0;
  for (std::size_t s = 0; s < op.width(); ++s) {
    const Pauli p = op.at(s);
    if (p == Pauli::I) continue;
    support.push_back(static_cast<int>(s));
    if (p != Pauli::Z) ++n_xy;
  }

  if (support.empty()) {
    circuit.global_phase = -theta;
    return circuit;
  }

  auto push_basis_in = [&](int site) {
    const Pauli p = op.at(static_cast<std::size_t>(site));
    if (p == Pauli::X)
      circuit.gates.push_back({GateKind::hadamard, site, 0, 0.0});
    else if (p == Pauli::Y)
      circuit.gates.push_back({GateKind::basis_y, site, 0, 0.0});
  };
  auto push_basis_out = [&](int site) {
    const Pauli p = op.at(static_cast<std::size_t>(site));
    if (p == Pauli::X)
      circuit.gates.push_back({GateKind::hadamard, site, 0, 0.0});
    else if (p == Pauli::Y)
      circuit.gates.push_back({GateKind::basis_y_dag, site, 0, 0.0});
  };

  for (const int s : support) push_basis_in(s);
  const int m = static_cast<int>(support.size());
  for (int k = 0; k + 1 < m; ++k)
    circuit.gates.push_back({GateKind::cnot, support[k], support[k + 1], 0.0});
  circuit.gates.push_back({GateKind::rz, support[m - 1], 0, 2.0 * theta});
  for (int k = m - 2; k >= 0; --k)
    circuit.gates.push_back({GateKind::cnot, support[k], support[k + 1], 0.0});
  for (int k = m - 1; k >= 0; --k) push_basis_out(support[k]);

  circuit.cnot_count = 2 * (m - 1);
  circuit.rotation_count = 1;
  circuit.basis_change_count = 2 * n_xy;
  return circuit;
}

void apply_compiled(const CompiledExponential& circuit, StateVector& state) {
  if (static_cast<int>(state.width()) != circuit.width)
    throw invariant_error("apply_compiled: width mismatch");
  static const Eigen::Matrix2cd h = hadamard_matrix();
  static const Eigen::Matrix2cd vy = basis_y_matrix();
  static const Eigen::Matrix2cd vy_dag = basis_y_matrix().adjoint();
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::hadamard:
        apply_one_qubit_gate(state, static_cast<std::size_t>(g.site), h);
        break;
      case GateKind::basis_y:
        apply_one_qubit_gate(state, static_cast<std::size_t>(g.site), vy);
        break;
      case GateKind::basis_y_dag:
        apply_one_qubit_gate(state, static_cast<std::size_t>(g.site), vy_dag);
        break;
      case GateKind::rz:
        apply_one_qubit_gate(state, static_cast<std::size_t>(g.site),
                             rz_matrix(g.angle));
        break;
      case GateKind::cnot:
        apply_cnot(state, static_cast<std::size_t>(g.site),
                   static_cast<std::size_t>(g.target));
        break;
    }
  }
  if (circuit.global_phase != 0.0) {
    const complexd phase = std::exp(complexd(0.0, circuit.global_phase));
    for (auto& a : state.amplitudes()) a *= phase;
  }
}

DenseMatrix compiled_unitary(const CompiledExponential& circuit) {
  const std::size_t width = static_cast<std::size_t>(circuit.width);
  if (width > 12)
    throw invariant_error("compiled_unitary limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << width;
  DenseMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector col = StateVector::basis_state(width, j);
    apply_compiled(circuit, col);
    u.col(static_cast<Eigen::Index>(j)) = col.to_eigen();
  }
  return u;
}

std::int64_t fmo_qubit_count(int chromophores, int modes, int levels) {
  if (chromophores < 1 || modes < 0)
    throw config_error("fmo_qubit_count: need chromophores >= 1, modes >= 0");
  if (levels < 2 || (levels & (levels - 1)) != 0)
    throw config_error("fmo_qubit_count: mode levels must be a power of two");
  std::int64_t q = 0;
  int d = levels;
  while (d > 1) {
    d >>= 1;
    ++q;
  }
  return (q * modes + 1) * static_cast<std::int64_t>(chromophores);
}

std::int64_t fmo_term_count(int chromophores, int modes) {
  if (chromophores < 1 || modes < 0)
    throw config_error("fmo_term_count: need chromophores >= 1, modes >= 0");
  const std::int64_t c = chromophores;
  return (1 + c + 20 * static_cast<std::int64_t>(modes)) * c;
}

double depth_upper_bound_pf4(int chromophores, int modes, int levels,
                             double lambda_max, double dt, double epsilon) {
  if (lambda_max <= 0.0 || dt <= 0.0 || epsilon <= 0.0)
    throw config_error("depth_upper_bound_pf4: invalid arguments");
  fmo_qubit_count(chromophores, modes, levels); // validates the grid point
  const double l = static_cast<double>(fmo_term_count(chromophores, modes));
  return 625.0 * l * std::pow(l * lambda_max * dt, 1.25) /
         std::pow(epsilon, 0.25);
}

} // namespace qocsim
