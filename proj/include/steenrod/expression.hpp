#pragma once

// Text syntax for Steenrod algebra elements:
//
//   elem   := term ("+" term)*
//   term   := "0" | "1" | factor+
//   factor := "Sq" INTEGER | "S" INTEGER
//
// "S j" expands to Sq^{2^j-1} ... Sq^7 Sq^3. Exponent 0 is rejected.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steenrod/adem.hpp"
#include "steenrod/errors.hpp"

namespace steenrod {

namespace detail {

class SteenrodScanner {
 public:
  explicit SteenrodScanner(std::string_view text) : text_(text) {}

  AdemElement parse() {
    AdemElement out;
    skip_space();
    if (at_end()) fail("empty expression");
    for (;;) {
      out += parse_term();
      skip_space();
      if (at_end()) break;
      if (peek() != '+') fail(std::string("expected '+' but found '") + peek() + "'");
      ++pos_;
      skip_space();
      if (at_end()) fail("expected a term after '+'");
    }
    return out;
  }

 private:
  static constexpr std::uint64_t max_exponent = std::uint64_t{1} << 20;
  static constexpr std::uint64_t max_s_index = 20;

  AdemElement parse_term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      const auto value = parse_integer();
      if (value > 1) fail_at(start, "only the literals 0 and 1 may stand alone");
      return value == 0 ? AdemElement::zero() : AdemElement::unit();
    }
    std::vector<Exponent> exps;
    std::size_t factors = 0;
    while (!at_end() && peek() == 'S') {
      parse_factor(exps);
      ++factors;
      skip_space();
    }
    if (factors == 0 && !at_end() && peek() != '+')
      fail(std::string("unexpected character '") + peek() + "'");
    if (factors == 0) fail("expected a Steenrod square");
    return AdemElement(SquareWord(exps));
  }

  void parse_factor(std::vector<Exponent>& exps) {
    const std::size_t start = pos_;
    ++pos_;  // 'S'
    const bool square = !at_end() && peek() == 'q';
    if (square) ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(square ? "expected an exponent after 'Sq'" : "expected an index after 'S'");
    const auto value = parse_integer();
    if (square) {
      if (value == 0) fail_at(start, "Sq0 is not allowed; use 1 for the unit");
      if (value > max_exponent) fail_at(start, "exponent too large");
      exps.push_back(static_cast<Exponent>(value));
    } else {
      if (value == 0) fail_at(start, "S0 is not defined; indices start at 1");
      if (value > max_s_index) fail_at(start, "S index too large");
      const SquareWord s_j = s_word(static_cast<int>(value));
      const auto& s = s_j.exponents();
      exps.insert(exps.end(), s.begin(), s.end());
    }
  }

  std::uint64_t parse_integer() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > max_exponent) fail_at(start, "integer too large");
      ++pos_;
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(message, 0, pos + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the textual form of a Steenrod algebra element. The result is not
/// normalized.
inline AdemElement parse_steenrod(std::string_view text) {
  return detail::SteenrodScanner(text).parse();
}

}  // namespace steenrod
