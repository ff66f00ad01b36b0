#ifndef BAIRE_ERROR_HPP
#define BAIRE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace baire {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated operation precondition (e.g. pred of a limit ordinal).
struct precondition_error : error {
  using error::error;
};

// Operation is not defined on this input class (e.g. symbolic rank of Sum).
struct unsupported_error : error {
  using error::error;
};

struct parse_error : error {
  size_t pos;
  parse_error(const std::string& msg, size_t at)
      : error(msg + " at position " + std::to_string(at)), pos(at) {}
};

struct not_reducible_error : error {
  using error::error;
};

}  // namespace baire

#endif
