#include "d2kit/presentation.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <unordered_map>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() != ch) return false;
    advance();
    return true;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::optional<std::string> identifier() {
    skip_space();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long signed_integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail("expected a signed integer exponent", ParseError::Kind::syntax, start_line_, start_column_);
    }
    return value;
  }

  // Position of the next significant character.
  std::pair<std::size_t, std::size_t> mark() {
    skip_space();
    start_line_ = line_;
    start_column_ = column_;
    return {line_, column_};
  }

  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::syntax) {
    skip_space();
    throw ParseError(kind, line_, column_, what);
  }

  [[noreturn]] static void fail(const std::string& what, ParseError::Kind kind, std::size_t line,
                                std::size_t column) {
    throw ParseError(kind, line, column, what);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t start_line_ = 1;
  std::size_t start_column_ = 1;
};

constexpr long kMaxExponent = 1'000'000;

GroupWord read_word(Scanner& in, const std::unordered_map<std::string, std::uint32_t>& index) {
  std::vector<Letter> raw;
  do {
    const auto [line, column] = in.mark();
    std::optional<std::uint32_t> generator;
    if (in.accept('1')) {
      // identity atom
    } else if (auto name = in.identifier()) {
      auto it = index.find(*name);
      if (it == index.end()) {
        Scanner::fail("unknown generator '" + *name + "'", ParseError::Kind::unknown_generator, line, column);
      }
      generator = it->second;
    } else {
      in.fail("expected a generator name or 1");
    }
    long exponent = 1;
    if (in.accept('^')) {
      in.mark();
      exponent = in.signed_integer();
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        Scanner::fail("exponent out of range", ParseError::Kind::syntax, line, column);
      }
    }
    if (generator) {
      const Letter l{*generator, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
      for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
    }
  } while (in.accept('*'));
  return free_reduce(raw);
}

std::unordered_map<std::string, std::uint32_t> index_of(const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<std::uint32_t>(i));
  return index;
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  Scanner in(text);
  GroupPresentation p;
  std::unordered_map<std::string, std::uint32_t> index;

  in.expect('<');
  if (in.peek() != '|') {
    do {
      const auto [line, column] = in.mark();
      auto name = in.identifier();
      if (!name) in.fail("expected a generator name");
      if (index.contains(*name)) {
        Scanner::fail("duplicate generator '" + *name + "'", ParseError::Kind::duplicate_generator, line,
                      column);
      }
      index.emplace(*name, static_cast<std::uint32_t>(p.generators.size()));
      p.generators.push_back(std::move(*name));
    } while (in.accept(','));
  }
  in.expect('|');
  if (in.peek() != '>') {
    do {
      const auto [line, column] = in.mark();
      GroupWord w = read_word(in, index);
      if (w.empty()) {
        Scanner::fail("relator reduces to the empty word", ParseError::Kind::empty_relator, line, column);
      }
      p.relators.push_back(std::move(w));
    } while (in.accept(','));
  }
  in.expect('>');
  if (!in.at_end()) in.fail("trailing characters after '>'");
  return p;
}

GroupWord parse_word(std::string_view text, const std::vector<std::string>& generator_names) {
  Scanner in(text);
  GroupWord w = read_word(in, index_of(generator_names));
  if (!in.at_end()) in.fail("trailing characters after word");
  return w;
}

std::string to_string(const GroupPresentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.relators[i], p.generators);
  }
  out += ">";
  return out;
}

}  // namespace d2kit
