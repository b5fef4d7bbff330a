#ifndef QOCSIM_PAULI_HPP
#define QOCSIM_PAULI_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qocsim {

using complexd = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// Tensor product of single-qubit Pauli operators on a fixed number of sites.
// Site 0 is the leftmost character of the text form and indexes the most
// significant bit of a computational-basis index. Internally the string is a
// pair of bit masks: x_mask marks sites carrying X or Y, z_mask marks sites
// carrying Z or Y, with site s mapped to bit (width-1-s).
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(std::string_view text);
  PauliString(std::size_t width, std::uint64_t x_mask, std::uint64_t z_mask);

  static constexpr std::size_t max_width = 32;

  std::size_t width() const { return width_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  Pauli at(std::size_t site) const;
  std::string text() const;

  std::size_t weight() const;   // number of non-identity sites
  bool is_identity() const { return (x_ | z_) == 0; }
  int y_count() const;          // number of Y sites

  // Dense 2^width x 2^width matrix representation.
  DenseMatrix matrix() const;

  // Action on a basis index: B|j> = phase(j) |j ^ x_mask()>.
  complexd phase(std::uint64_t j) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  // Lexicographic order of the text form (I < X < Y < Z).
  bool operator<(const PauliString& other) const;

private:
  std::size_t width_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliTerm {
  PauliString op;
  double coefficient = 0.0;
};

// Real linear combination of Pauli strings of a common width, kept in
// canonical (sorted, duplicate-free) order. Represents Hermitian operators
// with real coefficients in the normalized convention
//   coefficient(B) = Tr(B * A) / 2^width.
class PauliSum {
public:
  PauliSum() = default;
  explicit PauliSum(std::size_t width) : width_(width) {}
  PauliSum(std::size_t width, std::vector<PauliTerm> terms);

  std::size_t width() const { return width_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Coefficient of a string, 0 when absent.
  double coefficient(const PauliString& op) const;
  // Accumulate g * op into the sum, keeping canonical order.
  void add(const PauliString& op, double g);
  void drop_small(double threshold);
  std::size_t max_weight() const;
  double max_abs_coefficient() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(double scale);

private:
  std::size_t width_ = 0;
  std::vector<PauliTerm> terms_;
};

// Exact Pauli-basis decomposition of a Hermitian matrix whose dimension is a
// power of two: A = sum_B coefficient(B) * B with coefficient(B) =
// Tr(B*A)/2^N. Coefficients with |g| < drop_threshold are omitted.
// Throws invariant_error when A is not Hermitian (tolerance 1e-10) or its
// dimension is not a power of two.
PauliSum decompose(const DenseMatrix& a, double drop_threshold = 1e-12);

// Dense matrix reconstruction of a PauliSum.
DenseMatrix reconstruct(const PauliSum& sum);

// Embed an operator acting on a subset of qubit sites into a wider register:
// sites[k] gives the destination site of factor-site k. Sites must be
// distinct and inside [0, width).
PauliSum embed(const PauliSum& local, const std::vector<std::size_t>& sites,
               std::size_t width);

// Tensor product (a on the left / most significant sites).
PauliSum kron(const PauliSum& a, const PauliSum& b);

// Pad a d x d Hermitian matrix with zero rows/columns up to the next power
// of two.
DenseMatrix pad_to_power_of_two(const DenseMatrix& a);

std::size_t next_power_of_two_exponent(std::size_t d);

} // namespace qocsim

#endif
