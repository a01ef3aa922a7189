#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sperner {

/// Square boolean matrix, one bit-packed row per element.
class BitMatrix {
public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + kBlockBits - 1) / kBlockBits), bits_(n * stride_, 0) {}

  static BitMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * stride_ + j / kBlockBits] >> (j % kBlockBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Block& b = bits_[i * stride_ + j / kBlockBits];
    const Block m = Block{1} << (j % kBlockBits);
    b = value ? (b | m) : (b & ~m);
  }

  std::span<const Block> row(std::size_t i) const noexcept {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<Block> row(std::size_t i) noexcept { return {bits_.data() + i * stride_, stride_}; }

  std::size_t count() const noexcept;
  BitMatrix transposed() const;

  bool operator==(const BitMatrix&) const = default;

private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Block> bits_;
};

namespace bits {

inline void or_into(std::span<BitMatrix::Block> dst, std::span<const BitMatrix::Block> src) noexcept {
  for (std::size_t k = 0; k < dst.size(); ++k)
    dst[k] |= src[k];
}

inline bool any(std::span<const BitMatrix::Block> r) noexcept {
  for (auto b : r)
    if (b)
      return true;
  return false;
}

inline std::size_t popcount(std::span<const BitMatrix::Block> r) noexcept {
  std::size_t c = 0;
  for (auto b : r)
    c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

/// True iff the first n bits of r are all set.
bool all_set(std::span<const BitMatrix::Block> r, std::size_t n) noexcept;

/// Indices of set bits, ascending.
std::vector<std::size_t> indices(std::span<const BitMatrix::Block> r);

} // namespace bits
} // namespace sperner
