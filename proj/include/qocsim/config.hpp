#ifndef QOCSIM_CONFIG_HPP
#define QOCSIM_CONFIG_HPP

// Flat INI-style configuration: [section] headers, key = value lines,
// '#'/';' comments, comma-separated lists. All lookups are typed and throw
// config_error with the offending section.key in the message.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qocsim {

class Config {
public:
  static Config load(const std::string& path);
  static Config from_string(const std::string& text,
                            const std::string& origin = "<inline>");

  bool has(const std::string& section, const std::string& key) const;

  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  std::int64_t get_int(const std::string& section,
                       const std::string& key) const;
  std::int64_t get_int_or(const std::string& section, const std::string& key,
                          std::int64_t fallback) const;
  bool get_bool_or(const std::string& section, const std::string& key,
                   bool fallback) const;

  std::vector<double> get_double_list(const std::string& section,
                                      const std::string& key) const;
  std::vector<std::int64_t> get_int_list(const std::string& section,
                                         const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& section,
                                           const std::string& key) const;

  bool has_section(const std::string& section) const;
  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return data_;
  }

private:
  std::map<std::string, std::map<std::string, std::string>> data_;
  std::string origin_;

  const std::string& raw(const std::string& section,
                         const std::string& key) const;
};

} // namespace qocsim

#endif // QOCSIM_CONFIG_HPP
