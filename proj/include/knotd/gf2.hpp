#pragma once

// Dense linear algebra over the two-element field.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace knotd::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  void flip(std::size_t k) { words_[k / 64] ^= (std::uint64_t{1} << (k % 64)); }
  void set(std::size_t k) { words_[k / 64] |= (std::uint64_t{1} << (k % 64)); }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  bool is_zero() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Index of the lowest set bit.
  std::optional<std::size_t> lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incrementally built row-echelon basis of a subspace of F_2^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : pivot_row_(dimension, npos) {}

  /// Reduces v against the basis in place; returns true if v was outside the span.
  bool insert(BitVector v) {
    reduce(v);
    auto lead = v.lowest();
    if (!lead) return false;
    pivot_row_[*lead] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  // Each row's pivot is its lowest bit, so one ascending sweep clears every pivot column.
  void reduce(BitVector& v) const {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v.get(k) && pivot_row_[k] != npos) v ^= rows_[pivot_row_[k]];
  }

  bool contains(BitVector v) const {
    reduce(v);
    return v.is_zero();
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivot_row_;
};

/// Basis of the kernel of the linear map whose k-th column is columns[k].
/// Kernel vectors are expressed in the column index space.
inline std::vector<BitVector> kernel(const std::vector<BitVector>& columns, std::size_t target_dimension) {
  struct Pivot {
    BitVector image;
    BitVector combination;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Pivot> pivots;
  std::vector<std::size_t> pivot_at(target_dimension, npos);
  std::vector<BitVector> result;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    BitVector image = columns[c];
    BitVector combination(columns.size());
    combination.set(c);
    while (auto lead = image.lowest()) {
      if (pivot_at[*lead] == npos) break;
      const Pivot& p = pivots[pivot_at[*lead]];
      image ^= p.image;
      combination ^= p.combination;
    }
    if (auto lead = image.lowest()) {
      pivot_at[*lead] = pivots.size();
      pivots.push_back({std::move(image), std::move(combination)});
    } else {
      result.push_back(std::move(combination));
    }
  }
  return result;
}

}  // namespace knotd::gf2
