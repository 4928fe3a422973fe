#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace d2kit {

/// One generator raised to +1 or -1.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t exponent = 1;

  Letter inverse() const { return {generator, static_cast<std::int8_t>(-exponent)}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group. The empty word is the identity.
///
/// Ordering is shortlex (length first, then letterwise with x < x^-1 < y ...),
/// which fixes the iteration order of every symbolic group-ring element.
class GroupWord {
 public:
  GroupWord() = default;

  /// Freely reduces `letters`. Exponents other than +1/-1 are rejected.
  static GroupWord from_letters(std::span<const Letter> letters);
  static GroupWord generator(std::uint32_t index, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  GroupWord inverse() const;
  /// Largest generator index used plus one (0 for the identity).
  std::size_t generator_bound() const noexcept;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b);

 private:
  std::vector<Letter> letters_;
};

/// Stack-based free reduction; the result is equal to the input in the free group.
GroupWord free_reduce(std::span<const Letter> letters);

/// Renders in the presentation word syntax, e.g. `x^2*y^-1`; identity is `1`.
std::string to_string(const GroupWord& w, const std::vector<std::string>& generator_names);

}  // namespace d2kit
