#include "qocsim/config.hpp"

#include <fstream>
#include <sstream>

#include "qocsim/errors.hpp"

namespace qocsim {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
  // Comments start at '#' or ';' (no quoting in this format).
  const auto pos = line.find_first_of("#;");
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

} // namespace

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return from_string(text.str(), path);
}

Config Config::from_string(const std::string& text,
                           const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error(origin + ":" + std::to_string(line_no) +
                           ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw config_error(origin + ":" + std::to_string(line_no) +
                           ": empty section name");
      cfg.data_[section]; // section may legitimately stay empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(origin + ":" + std::to_string(line_no) +
                         ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw config_error(origin + ":" + std::to_string(line_no) +
                         ": empty key");
    cfg.data_[section][key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  return s != data_.end() && s->second.count(key) > 0;
}

bool Config::has_section(const std::string& section) const {
  return data_.count(section) > 0;
}

const std::string& Config::raw(const std::string& section,
                               const std::string& key) const {
  const auto s = data_.find(section);
  if (s != data_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) return k->second;
  }
  throw config_error(origin_ + ": missing key [" + section + "] " + key);
}

std::string Config::get(const std::string& section,
                        const std::string& key) const {
  return raw(section, key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? raw(section, key) : fallback;
}

namespace {

double to_double(const std::string& value, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != value.size())
    throw config_error(what + ": bad numeric value '" + value + "'");
  return v;
}

std::int64_t to_int(const std::string& value, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != value.size())
    throw config_error(what + ": bad integer value '" + value + "'");
  return v;
}

} // namespace

double Config::get_double(const std::string& section,
                          const std::string& key) const {
  return to_double(raw(section, key), "[" + section + "] " + key);
}

double Config::get_double_or(const std::string& section,
                             const std::string& key, double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

std::int64_t Config::get_int(const std::string& section,
                             const std::string& key) const {
  return to_int(raw(section, key), "[" + section + "] " + key);
}

std::int64_t Config::get_int_or(const std::string& section,
                                const std::string& key,
                                std::int64_t fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
  if (!has(section, key)) return fallback;
  const std::string v = raw(section, key);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw config_error("[" + section + "] " + key + ": bad boolean '" + v + "'");
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
  const std::string what = "[" + section + "] " + key;
  std::vector<double> out;
  for (const auto& item : split_list(raw(section, key)))
    out.push_back(to_double(item, what));
  if (out.empty()) throw config_error(what + ": empty list");
  return out;
}

std::vector<std::int64_t> Config::get_int_list(const std::string& section,
                                               const std::string& key) const {
  const std::string what = "[" + section + "] " + key;
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(raw(section, key)))
    out.push_back(to_int(item, what));
  if (out.empty()) throw config_error(what + ": empty list");
  return out;
}

std::vector<std::string> Config::get_string_list(const std::string& section,
                                                 const std::string& key) const {
  auto out = split_list(raw(section, key));
  if (out.empty())
    throw config_error("[" + section + "] " + key + ": empty list");
  return out;
}

} // namespace qocsim
