#include "qocsim/field.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "qocsim/errors.hpp"

namespace qocsim {

namespace {

void check_sizes(const ControlField& f) {
  const std::size_t n = f.amplitude.size();
  if (f.kind == FieldKind::cosine_comb) {
    if (f.base_frequency.size() != n || f.detuning.size() != n ||
        f.phase.size() != n)
      throw invariant_error("cosine field component arrays differ in size");
  } else {
    if (f.center.size() != n || f.width.size() != n)
      throw invariant_error("gaussian field component arrays differ in size");
  }
  if (f.total_time <= 0.0)
    throw invariant_error("field total_time must be positive");
}

} // namespace

double ControlField::value(double t) const {
  check_sizes(*this);
  const double x = std::clamp(t / total_time, 0.0, 1.0);
  double sum = 0.0;
  double env = 0.0;
  if (kind == FieldKind::cosine_comb) {
    env = std::pow(std::sin(std::numbers::pi * x), 1.0 / envelope_exponent);
    for (std::size_t i = 0; i < amplitude.size(); ++i)
      sum += amplitude[i] *
             std::cos((base_frequency[i] + detuning[i]) * t - phase[i]);
  } else {
    env = std::sqrt(std::sin(std::numbers::pi * x));
    for (std::size_t i = 0; i < amplitude.size(); ++i) {
      const double u = (t - center[i] * total_time) / (width[i] * total_time);
      sum += amplitude[i] * std::exp(-u * u);
    }
  }
  return env * sum;
}

std::vector<double> ControlField::parameters() const {
  check_sizes(*this);
  std::vector<double> theta;
  theta.reserve(3 * amplitude.size());
  theta.insert(theta.end(), amplitude.begin(), amplitude.end());
  if (kind == FieldKind::cosine_comb) {
    theta.insert(theta.end(), detuning.begin(), detuning.end());
    theta.insert(theta.end(), phase.begin(), phase.end());
  } else {
    theta.insert(theta.end(), center.begin(), center.end());
    theta.insert(theta.end(), width.begin(), width.end());
  }
  return theta;
}

void ControlField::set_parameters(std::span<const double> theta) {
  const std::size_t n = amplitude.size();
  if (theta.size() != 3 * n)
    throw invariant_error("field parameter vector has wrong size");
  for (std::size_t i = 0; i < n; ++i) amplitude[i] = theta[i];
  if (kind == FieldKind::cosine_comb) {
    for (std::size_t i = 0; i < n; ++i) detuning[i] = theta[n + i];
    for (std::size_t i = 0; i < n; ++i) phase[i] = theta[2 * n + i];
  } else {
    for (std::size_t i = 0; i < n; ++i) center[i] = theta[n + i];
    for (std::size_t i = 0; i < n; ++i) width[i] = theta[2 * n + i];
  }
}

std::vector<double> sample_field(const ControlField& field, double dt,
                                 std::int64_t n_steps, bool midpoint) {
  std::vector<double> samples(static_cast<std::size_t>(n_steps));
  const double offset = midpoint ? 0.5 : 0.0;
  for (std::int64_t k = 0; k < n_steps; ++k)
    samples[static_cast<std::size_t>(k)] =
        field.value((static_cast<double>(k) + offset) * dt);
  return samples;
}

namespace {

std::vector<double> parse_doubles(const std::string& text,
                                  const std::string& key) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw config_error("field fixture: bad number '" + tok + "' for " + key);
    }
  }
  return out;
}

} // namespace

ControlField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open field fixture: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw config_error("field fixture missing key '" + key + "': " + path);
    return it->second;
  };

  ControlField f;
  const std::string kind = need("kind");
  if (kind == "cosine_comb")
    f.kind = FieldKind::cosine_comb;
  else if (kind == "gaussian_comb")
    f.kind = FieldKind::gaussian_comb;
  else
    throw config_error("field fixture: unknown kind '" + kind + "'");
  f.total_time = parse_doubles(need("total_time"), "total_time").at(0);
  f.envelope_exponent =
      parse_doubles(need("envelope_exponent"), "envelope_exponent").at(0);
  f.amplitude = parse_doubles(need("amplitude"), "amplitude");
  if (f.kind == FieldKind::cosine_comb) {
    f.base_frequency = parse_doubles(need("base_frequency"), "base_frequency");
    f.detuning = parse_doubles(need("detuning"), "detuning");
    f.phase = parse_doubles(need("phase"), "phase");
  } else {
    f.center = parse_doubles(need("center"), "center");
    f.width = parse_doubles(need("width"), "width");
  }
  check_sizes(f);
  return f;
}

void save_field(const ControlField& field, const std::string& path) {
  check_sizes(field);
  std::ofstream out(path);
  if (!out) throw config_error("cannot write field fixture: " + path);
  out << std::setprecision(17);
  auto write_list = [&out](const char* key, const std::vector<double>& v) {
    out << key << " =";
    for (const double x : v) out << ' ' << x;
    out << '\n';
  };
  out << "# control field fixture\n";
  out << "kind = "
      << (field.kind == FieldKind::cosine_comb ? "cosine_comb"
                                               : "gaussian_comb")
      << '\n';
  out << "total_time = " << field.total_time << '\n';
  out << "envelope_exponent = " << field.envelope_exponent << '\n';
  write_list("amplitude", field.amplitude);
  if (field.kind == FieldKind::cosine_comb) {
    write_list("base_frequency", field.base_frequency);
    write_list("detuning", field.detuning);
    write_list("phase", field.phase);
  } else {
    write_list("center", field.center);
    write_list("width", field.width);
  }
}

} // namespace qocsim
