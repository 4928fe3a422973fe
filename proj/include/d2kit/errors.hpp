#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace d2kit {

/// Presentation text that does not follow the grammar.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, duplicate_generator, unknown_generator, empty_relator };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Coset enumeration did not close within the coset budget.
class EnumerationExhausted : public std::runtime_error {
 public:
  explicit EnumerationExhausted(std::size_t max_cosets);
  std::size_t max_cosets() const noexcept { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

/// An operation that needs a finite multiplication table got symbolic input.
class SymbolicNotSupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group-ring operands of different flavor or over different groups.
class FlavorMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction refused because an input certificate does not verify.
class CertificateRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace d2kit
