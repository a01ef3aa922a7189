#include "sperner/bit_matrix.hpp"

namespace sperner {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i);
  return m;
}

std::size_t BitMatrix::count() const noexcept { return bits::popcount(bits_); }

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j : bits::indices(row(i)))
      t.set(j, i);
  return t;
}

namespace bits {

bool all_set(std::span<const BitMatrix::Block> r, std::size_t n) noexcept {
  const std::size_t full = n / BitMatrix::kBlockBits;
  for (std::size_t k = 0; k < full; ++k)
    if (~r[k])
      return false;
  const std::size_t rest = n % BitMatrix::kBlockBits;
  if (rest == 0)
    return true;
  const BitMatrix::Block mask = (BitMatrix::Block{1} << rest) - 1;
  return (r[full] & mask) == mask;
}

std::vector<std::size_t> indices(std::span<const BitMatrix::Block> r) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    BitMatrix::Block b = r[k];
    while (b) {
      out.push_back(k * BitMatrix::kBlockBits + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
  return out;
}

} // namespace bits
} // namespace sperner
