#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "steenrod/adem.hpp"
#include "steenrod/gf2.hpp"

namespace steenrod {

/// Membership in the left ideal A Sq^1.
///
/// A Sq^1 is spanned by the admissible words ending in Sq^1: an admissible
/// word times Sq^1 either ends in Sq^1 or vanishes (Sq^1 Sq^1 = 0).
inline bool in_left_ideal_sq1(const AdemElement& element) {
  const AdemElement canonical = to_admissible(element);
  for (const auto& w : canonical.words())
    if (w.empty() || w.back() != 1) return false;
  return true;
}

inline constexpr std::uint64_t default_ideal_degree_cap = 30;

/// Coordinates of a canonical homogeneous element in the admissible basis of
/// degree n.
class AdmissibleCoordinates {
 public:
  explicit AdmissibleCoordinates(std::uint64_t degree) : degree_(degree), basis_(basis_in_degree(degree)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  std::uint64_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<SquareWord>& basis() const noexcept { return basis_; }

  Gf2Vector vector_of(const AdemElement& canonical) const {
    Gf2Vector v(basis_.size());
    for (const auto& w : canonical.words()) {
      auto it = index_.find(w);
      if (it == index_.end())
        throw std::invalid_argument("element " + w.to_string() + " is not an admissible word of degree " +
                                    std::to_string(degree_));
      v.flip(it->second);
    }
    return v;
  }

 private:
  std::uint64_t degree_;
  std::vector<SquareWord> basis_;
  std::map<SquareWord, std::size_t> index_;
};

/// Degree-n component of the two-sided ideal A Sq^1 A, spanned by the
/// canonical forms of a Sq^1 b over admissible a, b.
inline Gf2RowSpace two_sided_ideal_component(const AdmissibleCoordinates& coords) {
  const std::uint64_t n = coords.degree();
  Gf2RowSpace span(coords.dimension());
  if (n == 0) return span;
  AdemNormalizer& normalizer = detail::thread_normalizer();
  const SquareWord bockstein{1};
  for (std::uint64_t left = 0; left + 1 <= n; ++left) {
    const auto lhs = basis_in_degree(left);
    const auto rhs = basis_in_degree(n - 1 - left);
    for (const auto& a : lhs)
      for (const auto& b : rhs) {
        span.insert(coords.vector_of(normalizer.normalize(a * bockstein * b)));
        if (span.rank() == coords.dimension()) return span;
      }
  }
  return span;
}

/// Membership in the two-sided ideal A Sq^1 A, decided degreewise by
/// Gaussian elimination in the admissible basis.
///
/// Throws std::invalid_argument for non-homogeneous input and
/// std::domain_error when the degree exceeds degree_cap.
inline bool in_two_sided_ideal_sq1(const AdemElement& element,
                                   std::uint64_t degree_cap = default_ideal_degree_cap) {
  if (!element.is_homogeneous())
    throw std::invalid_argument("two-sided ideal test needs a homogeneous element");
  const AdemElement canonical = to_admissible(element);
  if (canonical.is_zero()) return true;
  const std::uint64_t n = *canonical.degree();
  if (n > degree_cap)
    throw std::domain_error("degree " + std::to_string(n) + " exceeds the two-sided ideal degree cap " +
                            std::to_string(degree_cap));
  const AdmissibleCoordinates coords(n);
  return two_sided_ideal_component(coords).contains(coords.vector_of(canonical));
}

}  // namespace steenrod
