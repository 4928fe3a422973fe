#include "d2kit/errors.hpp"

namespace d2kit {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

EnumerationExhausted::EnumerationExhausted(std::size_t max_cosets)
    : std::runtime_error("coset enumeration exhausted after " + std::to_string(max_cosets) +
                         " cosets; the group may be infinite or the bound too small"),
      max_cosets_(max_cosets) {}

}  // namespace d2kit
