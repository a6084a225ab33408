#ifndef SEMPRIV_ERRORS_HPP
#define SEMPRIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sempriv {

// Bad user input at the API boundary: malformed distributions, unknown or
// overlapping axes, out-of-range parameters.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed external data (JSON tables, IDX files).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// IDX-specific parse failure; keeps the offending field for structured reporting.
class idx_parse_error : public data_error {
 public:
  idx_parse_error(std::string field, const std::string& what)
      : data_error("idx parse error [" + field + "]: " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A verified invariant failed at runtime (bisection monotonicity, achievability,
// sandwich violations). Signals a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sempriv

#endif
