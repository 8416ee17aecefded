#ifndef LCT_ERRORS_HPP
#define LCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lct {

/// Malformed command-line or programmatic input.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

/// Dataset fails schema or internal consistency checks.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& m) : std::runtime_error(m) {}
};

/// Basket computation produced geometric nonsense (e.g. a fractional
/// number of points on a stratum).
struct BasketError : std::runtime_error {
  explicit BasketError(const std::string& m) : std::runtime_error(m) {}
};

/// A computed table value disagrees with the stored one and no
/// annotation covers the disagreement.
struct TableMismatchError : std::runtime_error {
  explicit TableMismatchError(const std::string& m) : std::runtime_error(m) {}
};

/// A certification step could not reach PASS or FAIL (missing facts).
struct IndeterminateError : std::runtime_error {
  explicit IndeterminateError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lct

#endif
