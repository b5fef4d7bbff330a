#include "qocsim/encoding.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qocsim/errors.hpp"

namespace qocsim {

RegisterLayout::RegisterLayout(std::vector<std::size_t> levels)
    : levels_(std::move(levels)) {
  for (const auto d : levels_)
    if (d < 2) throw invariant_error("register needs at least 2 levels");
}

std::size_t RegisterLayout::qubits(std::size_t r) const {
  return next_power_of_two_exponent(levels_.at(r));
}

std::size_t RegisterLayout::qubit_offset(std::size_t r) const {
  if (r >= levels_.size()) throw invariant_error("register out of range");
  std::size_t off = 0;
  for (std::size_t i = 0; i < r; ++i) off += qubits(i);
  return off;
}

std::size_t RegisterLayout::width() const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < levels_.size(); ++r) w += qubits(r);
  return w;
}

std::uint64_t RegisterLayout::basis_index(
    const std::vector<std::size_t>& level_index) const {
  if (level_index.size() != levels_.size())
    throw invariant_error("basis_index needs one level per register");
  std::uint64_t idx = 0;
  const std::size_t w = width();
  for (std::size_t r = 0; r < levels_.size(); ++r) {
    if (level_index[r] >= levels_[r])
      throw invariant_error("basis_index level out of range");
    const std::size_t shift = w - qubit_offset(r) - qubits(r);
    idx |= static_cast<std::uint64_t>(level_index[r]) << shift;
  }
  return idx;
}

std::size_t qubit_count(std::size_t registers, std::size_t levels) {
  return registers * next_power_of_two_exponent(levels);
}

double term_count_bound(std::size_t registers, std::size_t k,
                        std::size_t levels) {
  if (k > registers) return 0.0;
  double choose = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    choose *= static_cast<double>(registers - i) / static_cast<double>(i + 1);
  const double strings_per_register =
      std::pow(4.0, static_cast<double>(next_power_of_two_exponent(levels)));
  return choose * std::pow(strings_per_register, static_cast<double>(k));
}

DenseMatrix ho_lowering(std::size_t d) {
  DenseMatrix a = DenseMatrix::Zero(d, d);
  for (std::size_t v = 0; v + 1 < d; ++v)
    a(v, v + 1) = std::sqrt(static_cast<double>(v + 1));
  return a;
}

DenseMatrix ho_number(std::size_t d) {
  DenseMatrix n = DenseMatrix::Zero(d, d);
  for (std::size_t v = 0; v < d; ++v) n(v, v) = static_cast<double>(v);
  return n;
}

DenseMatrix ho_position(std::size_t d, double mass, double omega) {
  const DenseMatrix a = ho_lowering(d);
  return (a + a.adjoint()) / std::sqrt(2.0 * mass * omega);
}

DenseMatrix ho_kinetic(std::size_t d, double omega) {
  // p^2/(2m) = -(omega/4)(a^dagger - a)^2, projected exactly onto d levels.
  DenseMatrix t = DenseMatrix::Zero(d, d);
  for (std::size_t v = 0; v < d; ++v)
    t(v, v) = omega / 4.0 * (2.0 * static_cast<double>(v) + 1.0);
  for (std::size_t v = 0; v + 2 < d; ++v) {
    const double c = -omega / 4.0 *
                     std::sqrt(static_cast<double>((v + 1) * (v + 2)));
    t(v, v + 2) = c;
    t(v + 2, v) = c;
  }
  return t;
}

DenseMatrix operator_function_of_position(
    const std::function<double(double)>& f, std::size_t d, std::size_t d_int,
    double mass, double omega, double r_ref) {
  if (d_int < d)
    throw invariant_error("spectral calculus needs d_int >= d");
  const DenseMatrix r_int = ho_position(d_int, mass, omega);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(r_int);
  if (es.info() != Eigen::Success)
    throw invariant_error("position operator eigendecomposition failed");
  DenseVector fvals(d_int);
  for (std::size_t k = 0; k < d_int; ++k)
    fvals(k) = f(es.eigenvalues()(k) + r_ref);
  const DenseMatrix full = es.eigenvectors() * fvals.asDiagonal() *
                           es.eigenvectors().adjoint();
  return full.topLeftCorner(d, d);
}

DenseMatrix rotor_l2(std::size_t m_max) {
  const std::size_t d = 2 * m_max + 1;
  DenseMatrix l2 = DenseMatrix::Zero(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double m = static_cast<double>(i) - static_cast<double>(m_max);
    l2(i, i) = m * m;
  }
  return l2;
}

DenseMatrix rotor_cos(std::size_t m_max) {
  // cos(phi) = (e^{i phi} + e^{-i phi})/2; e^{i phi}|m> = |m+1>.
  const std::size_t d = 2 * m_max + 1;
  DenseMatrix c = DenseMatrix::Zero(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    c(i + 1, i) = 0.5;
    c(i, i + 1) = 0.5;
  }
  return c;
}

DenseMatrix rotor_sin(std::size_t m_max) {
  // sin(phi) = (e^{i phi} - e^{-i phi})/(2i).
  const std::size_t d = 2 * m_max + 1;
  DenseMatrix s = DenseMatrix::Zero(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    s(i + 1, i) = complexd{0.0, -0.5};
    s(i, i + 1) = complexd{0.0, 0.5};
  }
  return s;
}

PauliSum encode_term(const LocalTerm& term, const RegisterLayout& layout,
                     double drop_rel) {
  if (term.factors.empty() || term.factors.size() != term.registers.size())
    throw invariant_error("encode_term: factors/registers mismatch");
  // Decompose each factor on its own register, then combine; the Pauli basis
  // is multiplicative under tensor products, so per-register decompositions
  // compose exactly.
  PauliSum combined;
  for (std::size_t k = 0; k < term.factors.size(); ++k) {
    const std::size_t r = term.registers[k];
    const std::size_t d = layout.levels(r);
    const auto& f = term.factors[k];
    if (static_cast<std::size_t>(f.rows()) != d)
      throw invariant_error("encode_term: factor dimension != register levels");
    const PauliSum ps = decompose(pad_to_power_of_two(f), 0.0);
    combined = (k == 0) ? ps : kron(combined, ps);
  }
  // Map factor qubits onto the registers' qubit sites.
  std::vector<std::size_t> sites;
  for (const std::size_t r : term.registers) {
    const std::size_t off = layout.qubit_offset(r);
    for (std::size_t q = 0; q < layout.qubits(r); ++q)
      sites.push_back(off + q);
  }
  PauliSum out = embed(combined, sites, layout.width());
  out *= term.scale;
  out.drop_small(drop_rel * out.max_abs_coefficient());
  return out;
}

PauliSum encode_hamiltonian(const std::vector<LocalTerm>& terms,
                            const RegisterLayout& layout, double drop_rel) {
  PauliSum total(layout.width());
  for (const auto& term : terms) total += encode_term(term, layout, drop_rel);
  total.drop_small(drop_rel * total.max_abs_coefficient());
  return total;
}

PauliSum embed_local(const PauliSum& op,
                     const std::vector<std::size_t>& registers,
                     const RegisterLayout& layout) {
  std::vector<std::size_t> sites;
  for (const std::size_t r : registers) {
    const std::size_t off = layout.qubit_offset(r);
    for (std::size_t q = 0; q < layout.qubits(r); ++q)
      sites.push_back(off + q);
  }
  if (sites.size() != op.width())
    throw invariant_error("embed_local: operator width != register qubits");
  return embed(op, sites, layout.width());
}

} // namespace qocsim
