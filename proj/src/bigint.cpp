#include "d2kit/bigint.hpp"

#include <stdexcept>
#include <string>

namespace d2kit {

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("empty integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
    value *= 10;
    value += ch - '0';
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace d2kit
