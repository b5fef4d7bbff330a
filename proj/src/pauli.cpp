#include "qocsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qocsim/errors.hpp"

namespace qocsim {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw invariant_error("invalid Pauli value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw config_error(std::string("invalid Pauli character '") + c + "'");
  }
}

PauliString::PauliString(std::string_view text) : width_(text.size()) {
  if (width_ == 0 || width_ > max_width)
    throw config_error("Pauli string width must be in [1, " +
                       std::to_string(max_width) + "], got \"" +
                       std::string(text) + "\"");
  for (std::size_t s = 0; s < width_; ++s) {
    const Pauli p = pauli_from_char(text[s]);
    const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - s);
    if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
    if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
  }
}

PauliString::PauliString(std::size_t width, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : width_(width), x_(x_mask), z_(z_mask) {
  if (width == 0 || width > max_width)
    throw invariant_error("Pauli string width out of range");
  const std::uint64_t valid =
      width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  if ((x_ | z_) & ~valid)
    throw invariant_error("Pauli string mask exceeds width");
}

Pauli PauliString::at(std::size_t site) const {
  if (site >= width_) throw invariant_error("Pauli site out of range");
  const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - site);
  const bool x = x_ & bit, z = z_ & bit;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

std::string PauliString::text() const {
  std::string out(width_, 'I');
  for (std::size_t s = 0; s < width_; ++s) out[s] = pauli_char(at(s));
  return out;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

int PauliString::y_count() const { return std::popcount(x_ & z_); }

complexd PauliString::phase(std::uint64_t j) const {
  // B = (i)^{y_count} X^{x} Z^{z} acting on |j>:
  //   Z^{z}|j> = (-1)^{popcount(j & z)} |j>, X^{x}|j> = |j ^ x>.
  static const complexd i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const complexd base = i_pow[y_count() & 3];
  const bool neg = std::popcount(j & z_) & 1;
  return neg ? -base : base;
}

DenseMatrix PauliString::matrix() const {
  if (width_ > 12)
    throw invariant_error("dense Pauli matrix limited to width <= 12");
  const std::size_t dim = std::size_t{1} << width_;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (std::uint64_t j = 0; j < dim; ++j) m(j ^ x_, j) = phase(j);
  return m;
}

bool PauliString::operator<(const PauliString& other) const {
  if (width_ != other.width_) return width_ < other.width_;
  for (std::size_t s = 0; s < width_; ++s) {
    const auto a = at(s), b = other.at(s);
    if (a != b) return static_cast<int>(a) < static_cast<int>(b);
  }
  return false;
}

PauliSum::PauliSum(std::size_t width, std::vector<PauliTerm> terms)
    : width_(width), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.op.width() != width_)
      throw invariant_error("PauliSum term width mismatch");
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.op < b.op; });
  // Merge duplicates.
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().op == t.op)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(t);
  }
  terms_ = std::move(merged);
}

double PauliSum::coefficient(const PauliString& op) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), op,
      [](const PauliTerm& t, const PauliString& k) { return t.op < k; });
  if (it != terms_.end() && it->op == op) return it->coefficient;
  return 0.0;
}

void PauliSum::add(const PauliString& op, double g) {
  if (op.width() != width_)
    throw invariant_error("PauliSum::add width mismatch");
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), op,
      [](const PauliTerm& t, const PauliString& k) { return t.op < k; });
  if (it != terms_.end() && it->op == op)
    it->coefficient += g;
  else
    terms_.insert(it, PauliTerm{op, g});
}

void PauliSum::drop_small(double threshold) {
  std::erase_if(terms_, [threshold](const PauliTerm& t) {
    return std::abs(t.coefficient) < threshold;
  });
}

std::size_t PauliSum::max_weight() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.op.weight());
  return w;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.width_ != width_)
    throw invariant_error("PauliSum width mismatch in +=");
  for (const auto& t : other.terms_) add(t.op, t.coefficient);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

std::size_t next_power_of_two_exponent(std::size_t d) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

DenseMatrix pad_to_power_of_two(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw invariant_error("pad: matrix not square");
  const std::size_t d = static_cast<std::size_t>(a.rows());
  const std::size_t dim = std::size_t{1} << next_power_of_two_exponent(d);
  if (dim == d) return a;
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  out.topLeftCorner(d, d) = a;
  return out;
}

PauliSum decompose(const DenseMatrix& a, double drop_threshold) {
  if (a.rows() != a.cols()) throw invariant_error("decompose: not square");
  const std::size_t dim = static_cast<std::size_t>(a.rows());
  const std::size_t width = next_power_of_two_exponent(dim);
  if ((std::size_t{1} << width) != dim)
    throw invariant_error("decompose: dimension is not a power of two");
  if (width == 0 || width > 10)
    throw invariant_error("decompose: width must be in [1, 10]");
  const double scale = std::max(1e-300, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw invariant_error("decompose: matrix is not Hermitian");

  std::vector<PauliTerm> terms;
  // Enumerate strings by (x, z) mask pairs; Tr(B*A) = sum_j phase(j) A(j, j^x).
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      const PauliString op(width, x, z);
      complexd tr = 0.0;
      for (std::uint64_t j = 0; j < dim; ++j) tr += op.phase(j) * a(j, j ^ x);
      const complexd g = tr / static_cast<double>(dim);
      if (std::abs(g.imag()) > 1e-10 * scale)
        throw invariant_error("decompose: complex coefficient for " +
                              op.text());
      if (std::abs(g.real()) >= drop_threshold)
        terms.push_back({op, g.real()});
    }
  }
  return PauliSum(width, std::move(terms));
}

DenseMatrix reconstruct(const PauliSum& sum) {
  if (sum.width() == 0 || sum.width() > 12)
    throw invariant_error("reconstruct: width must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << sum.width();
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& t : sum.terms()) {
    const std::uint64_t x = t.op.x_mask();
    for (std::uint64_t j = 0; j < dim; ++j)
      out(j ^ x, j) += t.coefficient * t.op.phase(j);
  }
  return out;
}

PauliSum embed(const PauliSum& local, const std::vector<std::size_t>& sites,
               std::size_t width) {
  if (sites.size() != local.width())
    throw invariant_error("embed: site list does not match operator width");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] >= width) throw invariant_error("embed: site out of range");
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j]) throw invariant_error("embed: repeated site");
  }
  std::vector<PauliTerm> terms;
  terms.reserve(local.size());
  for (const auto& t : local.terms()) {
    std::uint64_t x = 0, z = 0;
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const std::uint64_t src = std::uint64_t{1} << (local.width() - 1 - s);
      const std::uint64_t dst = std::uint64_t{1} << (width - 1 - sites[s]);
      if (t.op.x_mask() & src) x |= dst;
      if (t.op.z_mask() & src) z |= dst;
    }
    terms.push_back({PauliString(width, x, z), t.coefficient});
  }
  return PauliSum(width, std::move(terms));
}

PauliSum kron(const PauliSum& a, const PauliSum& b) {
  const std::size_t width = a.width() + b.width();
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const std::uint64_t x = (ta.op.x_mask() << b.width()) | tb.op.x_mask();
      const std::uint64_t z = (ta.op.z_mask() << b.width()) | tb.op.z_mask();
      terms.push_back(
          {PauliString(width, x, z), ta.coefficient * tb.coefficient});
    }
  }
  return PauliSum(width, std::move(terms));
}

} // namespace qocsim
