#ifndef QOCSIM_ERRORS_HPP
#define QOCSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qocsim {

// Bad user input: malformed config, unparsable data file, invalid CLI value.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violated (dimension mismatch, non-normalized state, ...).
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// A requested run failed to meet its own success condition (optimizer did
// not converge, validation mismatch beyond tolerance, ...).
class run_error : public std::runtime_error {
public:
  explicit run_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qocsim

#endif
