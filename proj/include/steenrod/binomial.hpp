#pragma once

#include <cstdint>

namespace steenrod {

/// Parity of the binomial coefficient C(n, k).
///
/// By Lucas' theorem C(n, k) is odd exactly when the binary digits of k are
/// dominated by those of n, i.e. (k & ~n) == 0. Out-of-range k gives 0.
constexpr int binom_mod2(std::int64_t n, std::int64_t k) noexcept {
  if (n < 0 || k < 0 || k > n) return 0;
  return (k & ~n) == 0 ? 1 : 0;
}

}  // namespace steenrod
