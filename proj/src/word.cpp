#include "d2kit/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace d2kit {

GroupWord free_reduce(std::span<const Letter> letters) { return GroupWord::from_letters(letters); }

GroupWord GroupWord::from_letters(std::span<const Letter> letters) {
  GroupWord w;
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw std::invalid_argument("letter exponent must be +1 or -1");
    }
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

GroupWord GroupWord::generator(std::uint32_t index, int exponent) {
  std::vector<Letter> raw;
  const Letter l{index, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  for (int k = 0; k < std::abs(exponent); ++k) raw.push_back(l);
  return from_letters(raw);
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::size_t GroupWord::generator_bound() const noexcept {
  std::size_t bound = 0;
  for (const Letter& l : letters_) bound = std::max<std::size_t>(bound, l.generator + 1);
  return bound;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  // Cancel at the seam only; both halves are already reduced.
  std::size_t cancel = 0;
  const auto& la = a.letters_;
  const auto& lb = b.letters_;
  while (cancel < la.size() && cancel < lb.size() && la[la.size() - 1 - cancel] == lb[cancel].inverse()) {
    ++cancel;
  }
  GroupWord w;
  w.letters_.reserve(la.size() + lb.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), la.begin(), la.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), lb.begin() + static_cast<std::ptrdiff_t>(cancel), lb.end());
  return w;
}

namespace {

// x < x^-1 < y < y^-1 < ...
int letter_rank(const Letter& l) { return static_cast<int>(l.generator) * 2 + (l.exponent < 0 ? 1 : 0); }

}  // namespace

std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = letter_rank(a.letters_[i]) <=> letter_rank(b.letters_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const GroupWord& w, const std::vector<std::string>& generator_names) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i) * ls[i].exponent;
    if (!out.empty()) out += '*';
    const auto g = ls[i].generator;
    out += g < generator_names.size() ? generator_names[g] : "g" + std::to_string(g);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace d2kit
