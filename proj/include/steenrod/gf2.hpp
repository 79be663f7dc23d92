#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace steenrod {

/// Dense bit vector over F_2 of fixed width.
class Gf2Vector {
 public:
  explicit Gf2Vector(std::size_t width = 0) : width_(width), blocks_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }
  void flip(std::size_t i) { blocks_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  Gf2Vector& operator^=(const Gf2Vector& rhs) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] ^= rhs.blocks_[b];
    return *this;
  }

  bool is_zero() const noexcept {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }

  /// Index of the lowest set bit, or width() when zero.
  std::size_t lowest() const noexcept {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b]) return b * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[b]));
    return width_;
  }

  bool operator==(const Gf2Vector&) const = default;

 private:
  std::size_t width_;
  std::vector<std::uint64_t> blocks_;
};

/// Incrementally built row space over F_2, kept in echelon form keyed by
/// the lowest set bit of each row.
class Gf2RowSpace {
 public:
  explicit Gf2RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces v against the current rows; returns the remainder.
  Gf2Vector reduce(Gf2Vector v) const {
    for (std::size_t p = v.lowest(); p < width_; p = v.lowest()) {
      auto it = rows_.find(p);
      if (it == rows_.end()) break;
      v ^= it->second;
    }
    return v;
  }

  /// Adds v to the spanning set; returns true when the rank grew.
  bool insert(const Gf2Vector& v) {
    Gf2Vector r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t p = r.lowest();
    rows_.emplace(p, std::move(r));
    return true;
  }

  bool contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

 private:
  std::size_t width_;
  std::unordered_map<std::size_t, Gf2Vector> rows_;
};

}  // namespace steenrod
