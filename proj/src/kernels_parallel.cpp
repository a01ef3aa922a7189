#include <algorithm>
#include <atomic>
#include <limits>

#include "sperner/kernels.hpp"

namespace sperner::kernels::parallel {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = a.size();
  BitMatrix c(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    auto dst = c.row(r);
    for (std::size_t k : bits::indices(a.row(r)))
      bits::or_into(dst, b.row(k));
  }
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
  const auto end = static_cast<std::int64_t>(Mask{1} << comparable.size());
  std::vector<Mask> out;
#pragma omp parallel
  {
    std::vector<Mask> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < end; ++m)
      if (is_maximal_antichain_mask(comparable, static_cast<Mask>(m)))
        local.push_back(static_cast<Mask>(m));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

std::optional<Mask> first_split(const BitMatrix& leq, const BitMatrix& geq,
                                std::span<const std::size_t> antichain) {
  const std::size_t n = leq.size();
  const auto end = static_cast<std::int64_t>(Mask{1} << antichain.size());
  constexpr Mask kNone = std::numeric_limits<Mask>::max();
  std::atomic<Mask> best{kNone};
#pragma omp parallel
  {
    std::vector<BitMatrix::Block> cover(leq.stride());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t r = 0; r < end; ++r) {
      const auto rank = static_cast<Mask>(r);
      if (rank >= best.load(std::memory_order_relaxed))
        continue;
      std::fill(cover.begin(), cover.end(), 0);
      for (std::size_t i = 0; i < antichain.size(); ++i) {
        const bool down = (rank >> i) & 1u;
        bits::or_into(cover, down ? geq.row(antichain[i]) : leq.row(antichain[i]));
      }
      if (bits::all_set(cover, n)) {
        Mask cur = best.load();
        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
        }
      }
    }
  }
  const Mask found = best.load();
  if (found == kNone)
    return std::nullopt;
  return found;
}

std::optional<DenseViolation> first_dense_violation(const BitMatrix& leq, const BitMatrix& geq) {
  const std::size_t n = leq.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<BitMatrix::Block> between(leq.stride());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t xi = 0; xi < rows; ++xi) {
      const auto x = static_cast<std::size_t>(xi);
      if (x * n >= best.load(std::memory_order_relaxed))
        continue;
      for (std::size_t y : bits::indices(leq.row(x))) {
        if (y == x)
          continue;
        auto up = leq.row(x);
        auto down = geq.row(y);
        for (std::size_t k = 0; k < between.size(); ++k)
          between[k] = up[k] & down[k];
        between[x / BitMatrix::kBlockBits] &= ~(BitMatrix::Block{1} << (x % BitMatrix::kBlockBits));
        between[y / BitMatrix::kBlockBits] &= ~(BitMatrix::Block{1} << (y % BitMatrix::kBlockBits));
        if (!bits::any(between))
          continue;
        bool found = false;
        for (std::size_t z : bits::indices(between)) {
          auto zu = leq.row(z);
          auto zd = geq.row(z);
          for (std::size_t k = 0; k < between.size() && !found; ++k)
            found = (between[k] & ~zu[k] & ~zd[k]) != 0;
          if (found)
            break;
        }
        if (!found) {
          const std::size_t here = x * n + y;
          std::size_t cur = best.load();
          while (here < cur && !best.compare_exchange_weak(cur, here)) {
          }
          break;
        }
      }
    }
  }
  const std::size_t found = best.load();
  if (found == kNone)
    return std::nullopt;
  return DenseViolation{found / n, found % n};
}

} // namespace sperner::kernels::parallel
