#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "steenrod/adem.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

/// Seed used by every randomized check unless one is given explicitly.
inline constexpr std::uint64_t default_seed = 1729;

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Uniformly random composition of degree into at most max_length positive
/// parts (the length is drawn first).
inline SquareWord random_word(Rng& rng, std::uint64_t degree, std::uint64_t max_length = 10) {
  if (degree == 0) return {};
  const auto length = uniform(rng, 1, std::min(degree, max_length));
  // choose length-1 distinct cut points in 1..degree-1
  std::vector<std::uint64_t> cuts;
  std::vector<std::uint64_t> pool(degree - 1);
  for (std::uint64_t c = 0; c + 1 < degree; ++c) pool[c] = c + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(length - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Exponent> parts;
  std::uint64_t prev = 0;
  for (auto c : cuts) {
    parts.push_back(static_cast<Exponent>(c - prev));
    prev = c;
  }
  parts.push_back(static_cast<Exponent>(degree - prev));
  return SquareWord(parts);
}

/// Homogeneous element: sum of up to max_terms random words of one degree.
inline AdemElement random_adem_element(Rng& rng, std::uint64_t degree, std::size_t max_terms = 3,
                                       std::uint64_t max_length = 10) {
  AdemElement out;
  const auto terms = uniform(rng, 1, max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) out.toggle(random_word(rng, degree, max_length));
  return out;
}

/// Random monomial of the given degree in the free algebra on the ring's
/// generators; nullopt when none was found.
inline std::optional<Monomial> random_raw_monomial(Rng& rng, const RingPresentation& ring, std::uint64_t degree) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<std::uint32_t> e(ring.generator_count(), 0);
    std::uint64_t remaining = degree;
    while (remaining > 0) {
      std::vector<std::size_t> fits;
      for (std::size_t g = 0; g < ring.generator_count(); ++g)
        if (ring.generator(g).degree <= remaining) fits.push_back(g);
      if (fits.empty()) break;
      const auto g = fits[uniform(rng, 0, fits.size() - 1)];
      ++e[g];
      remaining -= ring.generator(g).degree;
    }
    if (remaining == 0) return Monomial(std::move(e));
  }
  return std::nullopt;
}

/// Random homogeneous raw combination of degree `degree`.
inline Terms random_raw_terms(Rng& rng, const RingPresentation& ring, std::uint64_t degree,
                              std::size_t max_terms = 4) {
  Terms out;
  const auto terms = uniform(rng, 1, max_terms);
  for (std::uint64_t t = 0; t < terms; ++t)
    if (auto m = random_raw_monomial(rng, ring, degree)) toggle(out, *m);
  return out;
}

/// Random homogeneous element in normal form.
inline RingElement random_ring_element(Rng& rng, const RingPresentation& ring, std::uint64_t degree,
                                       std::size_t max_terms = 4) {
  return ring.normalize(random_raw_terms(rng, ring, degree, max_terms));
}

}  // namespace steenrod
