#ifndef QOCSIM_FIELD_HPP
#define QOCSIM_FIELD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qocsim {

enum class FieldKind { cosine_comb, gaussian_comb };

// Control field ansatz. Both kinds are modulated by a half-sine envelope
// that switches the field on and off smoothly over [0, T]:
//   cosine_comb:  f(t) = sin(pi t/T)^(1/envelope_exponent)
//                        * sum_i a_i cos((omega_i + delta_i) t - phi_i)
//   gaussian_comb: f(t) = sin(pi t/T)^(1/2)
//                        * sum_j a_j exp(-(t - b_j T)^2 / (c_j T)^2)
// The cosine base frequencies omega_i are structural (chosen from the
// model's transition spectrum) and are not part of the optimization vector;
// amplitudes, detunings and phases are. For the gaussian comb all of
// (a_j, b_j, c_j) are optimized.
struct ControlField {
  FieldKind kind = FieldKind::cosine_comb;
  double total_time = 0.0;
  double envelope_exponent = 2.0;

  std::vector<double> base_frequency; // cosine kind, size = components
  std::vector<double> amplitude;
  std::vector<double> detuning;       // cosine kind
  std::vector<double> phase;          // cosine kind
  std::vector<double> center;         // gaussian kind, units of T
  std::vector<double> width;          // gaussian kind, units of T

  std::size_t components() const { return amplitude.size(); }
  double value(double t) const;

  // Optimization-vector view: cosine packs [amplitudes, detunings, phases],
  // gaussian packs [amplitudes, centers, widths].
  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> theta);
};

// Field samples for a piecewise-constant plan: entry k is the field at
// t = k*dt (left endpoints) or t = (k+1/2)*dt (midpoints).
std::vector<double> sample_field(const ControlField& field, double dt,
                                 std::int64_t n_steps, bool midpoint);

// Fixture round-trip in a key = value text format.
ControlField load_field(const std::string& path);
void save_field(const ControlField& field, const std::string& path);

} // namespace qocsim

#endif
