#include "qocsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "qocsim/errors.hpp"

namespace qocsim {

StateVector::StateVector(std::size_t width) : width_(width) {
  if (width == 0 || width > 24)
    throw invariant_error("state vector width must be in [1, 24]");
  amps_.assign(std::size_t{1} << width, complexd{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t width, std::uint64_t index) {
  StateVector psi(width);
  if (index >= psi.dim())
    throw invariant_error("basis state index out of range");
  psi.amps_[0] = 0.0;
  psi.amps_[index] = 1.0;
  return psi;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw invariant_error("cannot normalize zero vector");
  for (auto& a : amps_) a /= n;
}

DenseVector StateVector::to_eigen() const {
  DenseVector v(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) v(i) = amps_[i];
  return v;
}

StateVector StateVector::from_eigen(std::size_t width, const DenseVector& v) {
  StateVector psi(width);
  if (static_cast<std::size_t>(v.size()) != psi.dim())
    throw invariant_error("from_eigen dimension mismatch");
  for (std::size_t i = 0; i < psi.dim(); ++i) psi.amps_[i] = v(i);
  return psi;
}

void apply_pauli(const PauliString& op, StateVector& psi) {
  if (op.width() != psi.width())
    throw invariant_error("apply_pauli width mismatch");
  const std::uint64_t x = op.x_mask();
  const std::size_t dim = psi.dim();
  auto& a = psi.amplitudes();
  if (x == 0) {
    for (std::uint64_t j = 0; j < dim; ++j) a[j] *= op.phase(j);
    return;
  }
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  const std::uint64_t low = pivot - 1;
  for (std::uint64_t k = 0; k < dim / 2; ++k) {
    const std::uint64_t i = ((k & ~low) << 1) | (k & low);
    const std::uint64_t j = i ^ x;
    const complexd ai = a[i], aj = a[j];
    a[i] = op.phase(j) * aj;
    a[j] = op.phase(i) * ai;
  }
}

namespace {

// Shared pair-update loop body. For B with x_mask != 0 the exponential mixes
// amplitude pairs (i, i^x); enumerating k over indices with the pivot bit
// removed visits each pair exactly once.
inline void exp_pair_update(std::vector<complexd>& a, std::uint64_t x,
                            std::uint64_t z, complexd base, double c,
                            double s, std::uint64_t k, std::uint64_t low) {
  const std::uint64_t i = ((k & ~low) << 1) | (k & low);
  const std::uint64_t j = i ^ x;
  const complexd ph_j = (std::popcount(j & z) & 1) ? -base : base;
  const complexd ph_i = (std::popcount(i & z) & 1) ? -base : base;
  const complexd ai = a[i], aj = a[j];
  const complexd mis{0.0, -s}; // -i*sin(theta)
  a[i] = c * ai + mis * (ph_j * aj);
  a[j] = c * aj + mis * (ph_i * ai);
}

} // namespace

void apply_pauli_exponential(StateVector& psi, const PauliString& op,
                             double theta) {
  if (op.width() != psi.width())
    throw invariant_error("apply_pauli_exponential width mismatch");
  if (op.is_identity()) {
    // exp(-i*theta*I) is a global phase; track it exactly.
    const complexd ph = std::polar(1.0, -theta);
    for (auto& a : psi.amplitudes()) a *= ph;
    return;
  }
  const double c = std::cos(theta), s = std::sin(theta);
  const std::uint64_t x = op.x_mask(), z = op.z_mask();
  static const complexd i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const complexd base = i_pow[op.y_count() & 3];
  auto& a = psi.amplitudes();
  const std::int64_t dim = static_cast<std::int64_t>(psi.dim());

  if (x == 0) {
    // Diagonal string: amplitude j picks up exp(-i*theta*(+/-1)).
    const complexd ep = complexd{c, 0} + complexd{0, -s} * base;
    const complexd em = complexd{c, 0} - complexd{0, -s} * base;
#pragma omp parallel for schedule(static) if (dim >= (1 << 14))
    for (std::int64_t j = 0; j < dim; ++j)
      a[j] *= (std::popcount(static_cast<std::uint64_t>(j) & z) & 1) ? em : ep;
    return;
  }

  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  const std::uint64_t low = pivot - 1;
  const std::int64_t half = dim / 2;
#pragma omp parallel for schedule(static) if (half >= (1 << 13))
  for (std::int64_t k = 0; k < half; ++k)
    exp_pair_update(a, x, z, base, c, s, static_cast<std::uint64_t>(k), low);
}

namespace reference {

void apply_pauli_exponential(StateVector& psi, const PauliString& op,
                             double theta) {
  if (op.width() != psi.width())
    throw invariant_error("apply_pauli_exponential width mismatch");
  // Build B|psi> explicitly, then combine: cos(theta)|psi> - i sin(theta) B|psi>.
  const std::size_t dim = psi.dim();
  std::vector<complexd> b(dim);
  const std::uint64_t x = op.x_mask();
  for (std::uint64_t j = 0; j < dim; ++j)
    b[j ^ x] = op.phase(j) * psi[j];
  const double c = std::cos(theta), s = std::sin(theta);
  const complexd mis{0.0, -s};
  for (std::size_t j = 0; j < dim; ++j)
    psi[j] = c * psi[j] + mis * b[j];
}

} // namespace reference

double expectation(const StateVector& psi, const PauliString& op) {
  if (op.width() != psi.width())
    throw invariant_error("expectation width mismatch");
  const std::uint64_t x = op.x_mask();
  complexd acc = 0.0;
  for (std::uint64_t j = 0; j < psi.dim(); ++j)
    acc += std::conj(psi[j ^ x]) * (op.phase(j) * psi[j]);
  if (std::abs(acc.imag()) > 1e-9)
    throw invariant_error("expectation of Pauli string is not real");
  return acc.real();
}

double expectation(const StateVector& psi, const PauliSum& observable) {
  double total = 0.0;
  for (const auto& t : observable.terms())
    total += t.coefficient * expectation(psi, t.op);
  return total;
}

void apply_one_qubit_gate(StateVector& psi, std::size_t site,
                          const Eigen::Matrix2cd& u) {
  if (site >= psi.width())
    throw invariant_error("apply_one_qubit_gate site out of range");
  const std::uint64_t bit = std::uint64_t{1} << (psi.width() - 1 - site);
  const std::uint64_t low = bit - 1;
  auto& a = psi.amplitudes();
  for (std::uint64_t k = 0; k < psi.dim() / 2; ++k) {
    const std::uint64_t i0 = ((k & ~low) << 1) | (k & low); // site bit = 0
    const std::uint64_t i1 = i0 | bit;
    const complexd a0 = a[i0], a1 = a[i1];
    a[i0] = u(0, 0) * a0 + u(0, 1) * a1;
    a[i1] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_cnot(StateVector& psi, std::size_t control, std::size_t target) {
  if (control >= psi.width() || target >= psi.width() || control == target)
    throw invariant_error("apply_cnot invalid sites");
  const std::uint64_t cb = std::uint64_t{1} << (psi.width() - 1 - control);
  const std::uint64_t tb = std::uint64_t{1} << (psi.width() - 1 - target);
  auto& a = psi.amplitudes();
  for (std::uint64_t i = 0; i < psi.dim(); ++i)
    if ((i & cb) && !(i & tb)) std::swap(a[i], a[i | tb]);
}

double sampled_expectation(const StateVector& psi, const PauliSum& observable,
                           std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw invariant_error("sampled_expectation needs shots > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  // Z-basis rotations: X -> H, Y -> (H S^dagger).
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Eigen::Matrix2cd sdg = Eigen::Matrix2cd::Identity();
  sdg(1, 1) = complexd{0.0, -1.0};
  const Eigen::Matrix2cd vy = h * sdg;

  double total = 0.0;
  for (const auto& t : observable.terms()) {
    if (t.op.is_identity()) {
      total += t.coefficient;
      continue;
    }
    StateVector rotated = psi;
    for (std::size_t s = 0; s < t.op.width(); ++s) {
      const Pauli p = t.op.at(s);
      if (p == Pauli::X) apply_one_qubit_gate(rotated, s, h);
      if (p == Pauli::Y) apply_one_qubit_gate(rotated, s, vy);
    }
    // Cumulative outcome distribution over basis states.
    std::vector<double> cdf(rotated.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
      acc += std::norm(rotated[i]);
      cdf[i] = acc;
    }
    const std::uint64_t support = t.op.x_mask() | t.op.z_mask();
    std::int64_t sum_pm = 0;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
      const double r = unif(rng) * acc;
      const auto it = std::lower_bound(cdf.begin(), cdf.end(), r);
      const std::uint64_t outcome =
          static_cast<std::uint64_t>(it - cdf.begin());
      sum_pm += (std::popcount(outcome & support) & 1) ? -1 : +1;
    }
    total += t.coefficient * static_cast<double>(sum_pm) /
             static_cast<double>(shots);
  }
  return total;
}

} // namespace qocsim
