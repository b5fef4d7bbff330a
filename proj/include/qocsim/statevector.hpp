#ifndef QOCSIM_STATEVECTOR_HPP
#define QOCSIM_STATEVECTOR_HPP

#include <cstdint>
#include <vector>

#include "qocsim/pauli.hpp"

namespace qocsim {

// Dense state vector on `width` qubits. Amplitude index bit (width-1-s)
// corresponds to site s, matching PauliString's convention.
class StateVector {
public:
  explicit StateVector(std::size_t width);
  static StateVector basis_state(std::size_t width, std::uint64_t index);

  std::size_t width() const { return width_; }
  std::size_t dim() const { return amps_.size(); }
  complexd& operator[](std::size_t i) { return amps_[i]; }
  const complexd& operator[](std::size_t i) const { return amps_[i]; }
  std::vector<complexd>& amplitudes() { return amps_; }
  const std::vector<complexd>& amplitudes() const { return amps_; }

  double norm() const;
  void normalize();

  DenseVector to_eigen() const;
  static StateVector from_eigen(std::size_t width, const DenseVector& v);

private:
  std::size_t width_ = 0;
  std::vector<complexd> amps_;
};

// In-place B|psi>.
void apply_pauli(const PauliString& op, StateVector& psi);

// In-place exp(-i*theta*B)|psi> = cos(theta)|psi> - i*sin(theta) B|psi>.
// OpenMP-parallel pair-update kernel; falls back to a serial loop below a
// size threshold.
void apply_pauli_exponential(StateVector& psi, const PauliString& op,
                             double theta);

namespace reference {
// Serial reference implementation of the same operation, written as an
// explicit B|psi> followed by the trigonometric combination. Kept as an
// independent code path for cross-validation and benchmarking.
void apply_pauli_exponential(StateVector& psi, const PauliString& op,
                             double theta);
} // namespace reference

// <psi|B|psi> (real part; the imaginary part must vanish for Hermitian B
// and is asserted small).
double expectation(const StateVector& psi, const PauliString& op);
// Sum of coefficient * <psi|B|psi> over terms.
double expectation(const StateVector& psi, const PauliSum& observable);

// One-qubit gate and CNOT application (used by the gate-level compiler and
// the sampling basis changes).
void apply_one_qubit_gate(StateVector& psi, std::size_t site,
                          const Eigen::Matrix2cd& u);
void apply_cnot(StateVector& psi, std::size_t control, std::size_t target);

// Shot-based estimate of <observable>: each non-identity term is rotated to
// the Z basis and sampled `shots` times from the exact outcome distribution;
// identity terms contribute exactly. Deterministic for a fixed seed.
double sampled_expectation(const StateVector& psi, const PauliSum& observable,
                           std::uint64_t shots, std::uint64_t seed);

} // namespace qocsim

#endif
