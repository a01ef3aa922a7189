#include <algorithm>

#include "sperner/kernels.hpp"

namespace sperner::kernels {

bool mask_lex_less(Mask a, Mask b) noexcept {
  const Mask diff = a ^ b;
  if (!diff)
    return false;
  const int t = std::countr_zero(diff);
  // Both lists agree below t. The one holding t is smaller unless the other
  // list ends there.
  if ((a >> t) & 1u)
    return (b >> t) != 0;
  return (a >> t) == 0;
}

namespace serial {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = a.size();
  BitMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a.test(i, k))
        bits::or_into(c.row(i), b.row(k));
  return c;
}

BitMatrix closure(BitMatrix r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    r.set(i, i);
  for (;;) {
    BitMatrix sq = multiply(r, r);
    if (sq == r)
      return r;
    r = std::move(sq);
  }
}

std::vector<Mask> maximal_antichain_masks(std::span<const Mask> comparable) {
  const Mask end = Mask{1} << comparable.size();
  std::vector<Mask> out;
  for (Mask m = 0; m < end; ++m)
    if (is_maximal_antichain_mask(comparable, m))
      out.push_back(m);
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

std::optional<Mask> first_split(const BitMatrix& leq, const BitMatrix& geq,
                                std::span<const std::size_t> antichain) {
  const std::size_t n = leq.size();
  const Mask end = Mask{1} << antichain.size();
  std::vector<BitMatrix::Block> cover(leq.stride());
  for (Mask rank = 0; rank < end; ++rank) {
    std::fill(cover.begin(), cover.end(), 0);
    for (std::size_t i = 0; i < antichain.size(); ++i) {
      const bool down = (rank >> i) & 1u;
      bits::or_into(cover, down ? geq.row(antichain[i]) : leq.row(antichain[i]));
    }
    if (bits::all_set(cover, n))
      return rank;
  }
  return std::nullopt;
}

std::optional<DenseViolation> first_dense_violation(const BitMatrix& leq, const BitMatrix& geq) {
  const std::size_t n = leq.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !leq.test(x, y))
        continue;
      std::vector<std::size_t> between;
      for (std::size_t z = 0; z < n; ++z)
        if (z != x && z != y && leq.test(x, z) && leq.test(z, y))
          between.push_back(z);
      if (between.empty())
        continue;
      bool found = false;
      for (std::size_t a = 0; a < between.size() && !found; ++a)
        for (std::size_t b = a + 1; b < between.size() && !found; ++b)
          found = !leq.test(between[a], between[b]) && !geq.test(between[a], between[b]);
      if (!found)
        return DenseViolation{x, y};
    }
  }
  return std::nullopt;
}

} // namespace serial
} // namespace sperner::kernels
