#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "d2kit/word.hpp"

namespace d2kit {

/// Generators plus freely reduced, nonempty relators.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  std::size_t generator_count() const noexcept { return generators.size(); }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Parses text such as `<x, y | x^2, y^3, x*y*x*y>`. Generators are
/// identifiers; a relator is atoms joined by `*`; an atom is an identifier
/// (or `1`) optionally followed by `^` and a signed integer. Whitespace is
/// ignored. Throws ParseError carrying line and column.
GroupPresentation parse_presentation(std::string_view text);

/// Parses a single word against known generator names (same atom syntax).
/// The result may be the identity.
GroupWord parse_word(std::string_view text, const std::vector<std::string>& generator_names);

std::string to_string(const GroupPresentation& p);

}  // namespace d2kit
