#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "steenrod/binomial.hpp"
#include "steenrod/square_word.hpp"

namespace steenrod {

/// The Adem relation for an inadmissible pair Sq^i Sq^j (0 < i < 2j):
///
///   Sq^i Sq^j = sum_{k=0}^{floor(i/2)} C(j-k-1, i-2k) Sq^{i+j-k} Sq^k
///
/// Every word on the right has length at most two and is admissible.
inline AdemElement adem_pair(Exponent i, Exponent j) {
  if (i == 0 || j == 0) throw std::invalid_argument("adem_pair: exponents must be positive");
  if (i >= 2 * j) {
    throw std::invalid_argument("adem_pair: Sq" + std::to_string(i) + " Sq" + std::to_string(j) +
                                " is already admissible");
  }
  AdemElement out;
  for (std::int64_t k = 0; 2 * k <= static_cast<std::int64_t>(i); ++k) {
    const std::int64_t top = static_cast<std::int64_t>(j) - k - 1;
    const std::int64_t bottom = static_cast<std::int64_t>(i) - 2 * k;
    if (binom_mod2(top, bottom))
      out.toggle(SquareWord{static_cast<long long>(i + j - k), static_cast<long long>(k)});
  }
  return out;
}

/// Which inadmissible pair a rewrite step replaces.
enum class RewriteStrategy { leftmost, rightmost };

/// Reduces elements of the Steenrod algebra to the admissible basis.
///
/// Each step picks an inadmissible adjacent pair (according to the strategy),
/// replaces it by its Adem expansion and recurses on the resulting words. The
/// canonical form of every word seen is memoized; the cache is owned by the
/// instance, so one normalizer must not be shared between threads.
class AdemNormalizer {
 public:
  explicit AdemNormalizer(RewriteStrategy strategy = RewriteStrategy::leftmost)
      : strategy_(strategy) {}

  RewriteStrategy strategy() const noexcept { return strategy_; }

  const AdemElement& normalize(const SquareWord& word) {
    if (auto it = cache_.find(word); it != cache_.end()) return it->second;

    AdemElement result;
    const std::size_t m = strategy_ == RewriteStrategy::leftmost ? word.first_inadmissible()
                                                                 : word.last_inadmissible();
    if (m == SquareWord::npos) {
      result.toggle(word);
    } else {
      const SquareWord prefix = word.slice(0, m);
      const SquareWord suffix = word.slice(m + 2, word.length());
      const AdemElement expansion = adem_pair(word[m], word[m + 1]);
      for (const auto& pair : expansion.words()) result += normalize(prefix * pair * suffix);
    }
    return cache_.emplace(word, std::move(result)).first->second;
  }

  AdemElement normalize(const AdemElement& element) {
    AdemElement out;
    for (const auto& w : element.words()) out += normalize(w);
    return out;
  }

  AdemElement multiply(const AdemElement& lhs, const AdemElement& rhs) {
    AdemElement out;
    for (const auto& a : lhs.words())
      for (const auto& b : rhs.words()) out += normalize(a * b);
    return out;
  }

  std::size_t cache_size() const noexcept { return cache_.size(); }
  void clear() { cache_.clear(); }

 private:
  RewriteStrategy strategy_;
  std::unordered_map<SquareWord, AdemElement, SquareWordHash> cache_;
};

namespace detail {
inline AdemNormalizer& thread_normalizer() {
  thread_local AdemNormalizer normalizer;
  return normalizer;
}
}  // namespace detail

/// Canonical (all-admissible) form of an element.
inline AdemElement to_admissible(const AdemElement& element) {
  return detail::thread_normalizer().normalize(element);
}

/// Product in the Steenrod algebra, returned in canonical form.
inline AdemElement multiply(const AdemElement& lhs, const AdemElement& rhs) {
  return detail::thread_normalizer().multiply(lhs, rhs);
}

/// The word Sq^{2^j - 1} ... Sq^7 Sq^3; S_1 is the unit.
inline SquareWord s_word(int j) {
  if (j < 1) throw std::invalid_argument("s_element: j must be >= 1");
  if (j > 31) throw std::invalid_argument("s_element: j too large");
  std::vector<Exponent> exps;
  for (int m = j; m >= 2; --m) exps.push_back((Exponent{1} << m) - 1);
  return SquareWord(exps);
}

inline AdemElement s_element(int j) { return AdemElement(s_word(j)); }

/// Degree 2^{j+1} - j - 3 of S_j.
inline std::uint64_t s_element_degree(int j) {
  return (std::uint64_t{1} << (j + 1)) - static_cast<std::uint64_t>(j) - 3;
}

/// Single square Sq^i as an element (Sq^0 is the unit).
inline AdemElement sq(Exponent i) { return AdemElement(SquareWord{static_cast<long long>(i)}); }

namespace detail {
inline void admissible_words(std::uint64_t remaining, std::uint64_t cap,
                             std::vector<Exponent>& prefix, std::vector<SquareWord>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t e = std::min(remaining, cap); e >= 1; --e) {
    // the rest must fit below e/2, e/4, ... whose sum is < e
    if (remaining - e > e) break;
    prefix.push_back(static_cast<Exponent>(e));
    admissible_words(remaining - e, e / 2, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All admissible words of degree n, in printing order (Sq3 before Sq2 Sq1).
inline std::vector<SquareWord> basis_in_degree(std::uint64_t n) {
  std::vector<SquareWord> out;
  std::vector<Exponent> prefix;
  detail::admissible_words(n, n, prefix, out);
  return out;
}

}  // namespace steenrod
