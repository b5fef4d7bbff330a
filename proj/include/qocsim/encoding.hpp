#ifndef QOCSIM_ENCODING_HPP
#define QOCSIM_ENCODING_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "qocsim/pauli.hpp"

namespace qocsim {

// Layout of a multi-register system: register r holds a d_r-level subsystem
// padded to ceil(log2 d_r) qubits. Register 0 occupies the leftmost
// (most significant) qubit sites.
class RegisterLayout {
public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<std::size_t> levels);

  std::size_t register_count() const { return levels_.size(); }
  std::size_t levels(std::size_t r) const { return levels_.at(r); }
  std::size_t qubits(std::size_t r) const;
  std::size_t qubit_offset(std::size_t r) const;
  std::size_t width() const; // total qubit count

  // Joint basis index of a product basis state given per-register level
  // indices.
  std::uint64_t basis_index(const std::vector<std::size_t>& level_index) const;

private:
  std::vector<std::size_t> levels_;
};

std::size_t qubit_count(std::size_t registers, std::size_t levels);

// 2^{2k*ceil(log2 d)} * C(registers, k): upper bound on the number of Pauli
// strings produced by k-register products in a d-level encoding.
double term_count_bound(std::size_t registers, std::size_t k,
                        std::size_t levels);

// Truncated harmonic-oscillator operators on d levels (dimensionless ladder
// convention unless stated otherwise).
DenseMatrix ho_lowering(std::size_t d);                    // a
DenseMatrix ho_number(std::size_t d);                      // a^dagger a
DenseMatrix ho_position(std::size_t d, double mass, double omega);
// Kinetic + harmonic part projected exactly onto the truncated basis:
// omega/4 * [(2v+1) on the diagonal, -sqrt((v+1)(v+2)) at offsets +/-2]
// for p^2/(2m), plus the harmonic potential handled by the caller.
DenseMatrix ho_kinetic(std::size_t d, double omega);

// f(r) evaluated by spectral calculus: diagonalize the position operator on
// an enlarged d_int-level space, apply f to its eigenvalues, project back to
// the truncated d-level corner. r is offset by r_ref (equilibrium distance).
DenseMatrix operator_function_of_position(
    const std::function<double(double)>& f, std::size_t d, std::size_t d_int,
    double mass, double omega, double r_ref);

// Planar-rotor operators on the 2m_max+1 angular-momentum levels
// m = -m_max..m_max (ascending). encode_term pads them with zero
// rows/columns to the register's qubit space.
DenseMatrix rotor_l2(std::size_t m_max);   // L^2, units of hbar^2
DenseMatrix rotor_cos(std::size_t m_max);  // cos(phi)
DenseMatrix rotor_sin(std::size_t m_max);  // sin(phi)

// A scale * A_1 (x) A_2 (x) ... acting on the listed registers (identity
// elsewhere). Factor k is a levels(registers[k])-dimensional matrix; it is
// padded to the register's qubit space before encoding.
struct LocalTerm {
  std::vector<DenseMatrix> factors;
  std::vector<std::size_t> registers;
  double scale = 1.0;
};

// Pauli-basis encoding of a LocalTerm in the layout's full qubit space.
// Coefficients below drop_rel * (largest coefficient of the term) are
// dropped.
PauliSum encode_term(const LocalTerm& term, const RegisterLayout& layout,
                     double drop_rel = 1e-12);

// Sum of encoded terms.
PauliSum encode_hamiltonian(const std::vector<LocalTerm>& terms,
                            const RegisterLayout& layout,
                            double drop_rel = 1e-12);

// Embed a PauliSum acting on a contiguous-register operator onto the listed
// registers of the wider layout.
PauliSum embed_local(const PauliSum& op,
                     const std::vector<std::size_t>& registers,
                     const RegisterLayout& layout);

} // namespace qocsim

#endif
