#pragma once

// Text formats for presented rings.
//
// Ring elements:  monomials such as "alpha^3*beta" joined by "+"; the
// literals "0" and "1".
//
// Presentation files are line oriented; "#" starts a comment:
//
//   ring NAME
//   topdeg D
//   gen NAME DEGREE
//   sq NAME I = ELEMENT
//   rel NAME^K = ELEMENT
//   cover NAME by ELEMENT
//
// Names must be declared by "gen" (or "cover") before they are used.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "steenrod/errors.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

namespace detail {

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

/// Cursor over one line of text, reporting 1-based columns.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line, std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_space();
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 1'000'000) fail_at(start, "integer too large");
      ++pos_;
    }
    return value;
  }

  std::string_view rest() const { return text_.substr(pos_); }

  void expect_end() {
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

inline Terms parse_terms(const RingPresentation& ring, LineCursor& cur) {
  Terms out;
  cur.skip_space();
  if (cur.at_end()) cur.fail("expected a ring element");
  do {
    Monomial term;
    bool literal_zero = false;
    do {
      cur.skip_space();
      if (!cur.at_end() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        const std::size_t start = cur.pos();
        const auto value = cur.integer();
        if (value > 1) cur.fail_at(start, "only the literals 0 and 1 are allowed as coefficients");
        if (value == 0) literal_zero = true;
        continue;
      }
      const std::size_t start = cur.pos();
      const std::string name = cur.name();
      const auto g = ring.find_generator(name);
      if (!g) cur.fail_at(start, "unknown generator '" + name + "'");
      std::uint64_t e = 1;
      if (cur.accept('^')) e = cur.integer();
      term = term * Monomial::single(*g, static_cast<std::uint32_t>(e));
    } while (cur.accept('*'));
    if (!literal_zero) toggle(out, term);
  } while (cur.accept('+'));
  return out;
}

}  // namespace detail

/// Parses an element over ring and returns its normal form.
inline RingElement parse_ring_element(const RingPresentation& ring, std::string_view text) {
  detail::LineCursor cur(text, 0);
  Terms raw = detail::parse_terms(ring, cur);
  cur.expect_end();
  return ring.normalize(raw);
}

/// Checks that explicit top squares agree with squaring.
inline void validate_sq_tables(const RingPresentation& ring) {
  for (std::size_t g = 0; g < ring.generator_count(); ++g) {
    const auto& gen = ring.generator(g);
    if (!gen.sq_table) continue;
    auto it = gen.sq_table->find(gen.degree);
    if (it == gen.sq_table->end()) continue;
    const auto square = ring.monomial(Monomial::single(g, 2));
    if (ring.normalize(it->second) != square)
      throw SemanticError("Sq" + std::to_string(gen.degree) + " " + gen.name + " must equal " + gen.name +
                          "^2 (instability)");
  }
}

/// Parses a presentation file.
///
/// Syntax errors raise ParseError with line and column; structural
/// violations raise SemanticError prefixed with the line number.
inline RingPresentation parse_presentation(std::string_view text) {
  RingPresentation ring("ring");
  bool named = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    detail::LineCursor cur(line, line_no);
    cur.skip_space();
    if (cur.at_end()) continue;
    const std::size_t keyword_pos = cur.pos();
    const std::string keyword = cur.name();
    try {
      if (keyword == "ring") {
        if (named) cur.fail_at(keyword_pos, "ring name given twice");
        ring.rename(cur.name());
        named = true;
        cur.expect_end();
      } else if (keyword == "topdeg") {
        const auto d = cur.integer();
        cur.expect_end();
        ring.set_top_degree(d);
      } else if (keyword == "gen") {
        const std::string name = cur.name();
        const auto d = cur.integer();
        cur.expect_end();
        if (d > 1000) throw SemanticError("generator degree too large");
        ring.add_generator(name, static_cast<std::uint32_t>(d));
      } else if (keyword == "sq") {
        const std::size_t name_pos = (cur.skip_space(), cur.pos());
        const std::string name = cur.name();
        const auto g = ring.find_generator(name);
        if (!g) cur.fail_at(name_pos, "unknown generator '" + name + "'");
        const auto i = cur.integer();
        cur.expect('=');
        Terms value = detail::parse_terms(ring, cur);
        cur.expect_end();
        ring.set_sq(*g, static_cast<std::uint32_t>(i), std::move(value));
      } else if (keyword == "rel") {
        const std::size_t name_pos = (cur.skip_space(), cur.pos());
        const std::string name = cur.name();
        const auto g = ring.find_generator(name);
        if (!g) cur.fail_at(name_pos, "unknown generator '" + name + "'");
        cur.expect('^');
        const auto k = cur.integer();
        cur.expect('=');
        Terms rhs = detail::parse_terms(ring, cur);
        cur.expect_end();
        ring.add_power_rule(*g, static_cast<std::uint32_t>(k), std::move(rhs));
      } else if (keyword == "cover") {
        const std::string name = cur.name();
        const std::size_t by_pos = (cur.skip_space(), cur.pos());
        if (cur.at_end() || !detail::is_name_start(cur.peek()) || cur.name() != "by") cur.fail_at(by_pos, "expected 'by'");
        Terms epsilon = detail::parse_terms(ring, cur);
        cur.expect_end();
        ring = adjoin_cover(ring, name, ring.normalize(epsilon));
      } else {
        cur.fail_at(keyword_pos, "unknown directive '" + keyword + "'");
      }
    } catch (const SemanticError& e) {
      throw SemanticError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate_sq_tables(ring);
  return ring;
}

/// Writes a presentation in the file format; parse_presentation reads it
/// back to a structurally equal ring.
inline std::string write_presentation(const RingPresentation& ring) {
  std::ostringstream out;
  out << "ring " << ring.name() << '\n';
  if (ring.top_degree()) out << "topdeg " << *ring.top_degree() << '\n';
  for (const auto& gen : ring.generators()) out << "gen " << gen.name << ' ' << gen.degree << '\n';
  for (std::size_t g = 0; g < ring.generator_count(); ++g) {
    const auto& gen = ring.generator(g);
    if (!gen.sq_table) continue;
    if (gen.sq_table->empty()) {
      // an empty table still marks the generator as carrying one
      out << "sq " << gen.name << " 1 = 0\n";
      continue;
    }
    for (const auto& [i, value] : *gen.sq_table)
      out << "sq " << gen.name << ' ' << i << " = " << ring.format(value) << '\n';
  }
  for (std::size_t g = 0; g < ring.generator_count(); ++g)
    if (const auto& rule = ring.rule(g))
      out << "rel " << ring.generator(g).name << '^' << rule->exponent << " = " << ring.format(rule->rhs) << '\n';
  return out.str();
}

}  // namespace steenrod
