#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace steenrod {

using Exponent = std::uint32_t;

/// A composition Sq^{e_0} Sq^{e_1} ... Sq^{e_{k-1}} of Steenrod squares.
///
/// The leftmost factor is stored first. Sq^0 is the identity and is never
/// stored, so the empty word is the unit of the algebra.
class SquareWord {
 public:
  SquareWord() = default;

  SquareWord(std::initializer_list<long long> exponents) {
    assign(exponents.begin(), exponents.end());
  }

  explicit SquareWord(std::span<const Exponent> exponents) {
    assign(exponents.begin(), exponents.end());
  }

  explicit SquareWord(const std::vector<Exponent>& exponents)
      : SquareWord(std::span<const Exponent>(exponents)) {}

  // rvalue overloads return by value so that temporaries can be iterated
  const std::vector<Exponent>& exponents() const& noexcept { return exps_; }
  std::vector<Exponent> exponents() && { return std::move(exps_); }
  std::size_t length() const noexcept { return exps_.size(); }
  bool empty() const noexcept { return exps_.empty(); }
  std::uint64_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent front() const { return exps_.front(); }
  Exponent back() const { return exps_.back(); }

  /// Serre-Cartan admissibility: e_m >= 2 e_{m+1} for every adjacent pair.
  bool admissible() const noexcept { return first_inadmissible() == npos; }

  /// Index m of the leftmost pair (m, m+1) violating admissibility, or npos.
  std::size_t first_inadmissible() const noexcept {
    for (std::size_t m = 0; m + 1 < exps_.size(); ++m)
      if (exps_[m] < 2 * exps_[m + 1]) return m;
    return npos;
  }

  /// Index m of the rightmost pair (m, m+1) violating admissibility, or npos.
  std::size_t last_inadmissible() const noexcept {
    for (std::size_t m = exps_.size(); m-- > 1;)
      if (exps_[m - 1] < 2 * exps_[m]) return m - 1;
    return npos;
  }

  /// Concatenation: the composite operation "this, then applied after rhs".
  SquareWord operator*(const SquareWord& rhs) const {
    SquareWord out;
    out.exps_.reserve(exps_.size() + rhs.exps_.size());
    out.exps_ = exps_;
    out.exps_.insert(out.exps_.end(), rhs.exps_.begin(), rhs.exps_.end());
    out.degree_ = degree_ + rhs.degree_;
    return out;
  }

  /// Sub-word [first, last).
  SquareWord slice(std::size_t first, std::size_t last) const {
    return SquareWord(std::span<const Exponent>(exps_).subspan(first, last - first));
  }

  std::string to_string() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (std::size_t m = 0; m < exps_.size(); ++m) {
      if (m) out += ' ';
      out += "Sq";
      out += std::to_string(exps_[m]);
    }
    return out;
  }

  bool operator==(const SquareWord& other) const noexcept { return exps_ == other.exps_; }

  /// Printing order: ascending degree, then lexicographically descending
  /// within a degree (Sq3 before Sq2 Sq1).
  std::strong_ordering operator<=>(const SquareWord& other) const noexcept {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return other.exps_ <=> exps_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  template <typename It>
  void assign(It first, It last) {
    for (; first != last; ++first) {
      const auto e = static_cast<long long>(*first);
      if (e < 0) throw std::invalid_argument("negative Steenrod square exponent");
      if (e == 0) continue;
      exps_.push_back(static_cast<Exponent>(e));
      degree_ += static_cast<std::uint64_t>(e);
    }
  }

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct SquareWordHash {
  std::size_t operator()(const SquareWord& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : w.exponents()) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// An element of the mod 2 Steenrod algebra written as a set of words.
///
/// Coefficients live in F_2, so addition is symmetric difference. The
/// element is canonical when every word is admissible; the type itself does
/// not enforce that (see to_admissible).
class AdemElement {
 public:
  AdemElement() = default;
  AdemElement(SquareWord word) { words_.insert(std::move(word)); }
  AdemElement(std::initializer_list<SquareWord> words) {
    for (const auto& w : words) toggle(w);
  }

  static AdemElement unit() { return AdemElement(SquareWord{}); }
  static AdemElement zero() { return {}; }

  const std::set<SquareWord>& words() const& noexcept { return words_; }
  std::set<SquareWord> words() && { return std::move(words_); }
  bool is_zero() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const SquareWord& w) const { return words_.count(w) != 0; }

  /// Adds a single word with coefficient one.
  void toggle(const SquareWord& w) {
    if (auto it = words_.find(w); it != words_.end()) {
      words_.erase(it);
    } else {
      words_.insert(w);
    }
  }

  AdemElement& operator+=(const AdemElement& rhs) {
    for (const auto& w : rhs.words_) toggle(w);
    return *this;
  }

  friend AdemElement operator+(AdemElement lhs, const AdemElement& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool is_canonical() const {
    for (const auto& w : words_)
      if (!w.admissible()) return false;
    return true;
  }

  /// The common degree of all words; nullopt for zero or mixed degrees.
  std::optional<std::uint64_t> degree() const {
    if (words_.empty()) return std::nullopt;
    const auto d = words_.begin()->degree();
    for (const auto& w : words_)
      if (w.degree() != d) return std::nullopt;
    return d;
  }

  /// Zero is homogeneous of every degree.
  bool is_homogeneous() const { return words_.empty() || degree().has_value(); }

  std::string to_string() const {
    if (words_.empty()) return "0";
    std::string out;
    for (const auto& w : words_) {
      if (!out.empty()) out += " + ";
      out += w.to_string();
    }
    return out;
  }

  bool operator==(const AdemElement&) const = default;

 private:
  std::set<SquareWord> words_;
};

}  // namespace steenrod
