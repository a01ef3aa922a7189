#pragma once

// Data-parallel kernels behind order_core and the C truncations.
//
// Every kernel exists twice: kernels::serial is the straightforward reference
// and kernels::parallel is the OpenMP version the library calls. Both must
// return identical results, including which witness is reported first.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "sperner/bit_matrix.hpp"

namespace sperner::kernels {

/// Subset of at most 63 elements, bit i = element i.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxMaskBits = 63;

/// Lexicographic order on the ascending index lists encoded by two masks.
bool mask_lex_less(Mask a, Mask b) noexcept;

/// Smallest interval (lower, upper), in row-major pair order, that is
/// non-empty yet contains no incomparable pair.
struct DenseViolation {
  std::size_t lower;
  std::size_t upper;
  bool operator==(const DenseViolation&) const = default;
};

inline bool is_maximal_antichain_mask(std::span<const Mask> comparable, Mask mask) noexcept {
  const std::size_t n = comparable.size();
  const Mask full = n == 0 ? 0 : (~Mask{0} >> (64 - n));
  Mask covered = mask;
  for (Mask rest = mask; rest; rest &= rest - 1) {
    const Mask c = comparable[static_cast<std::size_t>(std::countr_zero(rest))];
    if (c & mask)
      return false;
    covered |= c;
  }
  return covered == full;
}

namespace serial {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Reflexive-transitive closure by repeated squaring.
BitMatrix closure(BitMatrix r);

/// comparable[i]: elements comparable to i, excluding i. Result in
/// mask_lex_less order.
std::vector<Mask> maximal_antichain_masks(std::span<const Mask> comparable);

/// First partition rank (bit i set: antichain[i] goes to the down part) whose
/// down-set/up-set union covers every element.
std::optional<Mask> first_split(const BitMatrix& leq, const BitMatrix& geq,
                                std::span<const std::size_t> antichain);

std::optional<DenseViolation> first_dense_violation(const BitMatrix& leq, const BitMatrix& geq);

template <class Pred>
BitMatrix fill(std::size_t n, Pred&& pred) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j))
        m.set(i, j);
  return m;
}

} // namespace serial

namespace parallel {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitMatrix closure(BitMatrix r);
std::vector<Mask> maximal_antichain_masks(std::span<const Mask> comparable);
std::optional<Mask> first_split(const BitMatrix& leq, const BitMatrix& geq,
                                std::span<const std::size_t> antichain);
std::optional<DenseViolation> first_dense_violation(const BitMatrix& leq, const BitMatrix& geq);

template <class Pred>
BitMatrix fill(std::size_t n, Pred&& pred) {
  BitMatrix m(n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < rows; ++i) {
    try {
      const auto r = static_cast<std::size_t>(i);
      for (std::size_t j = 0; j < n; ++j)
        if (pred(r, j))
          m.set(r, j);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return m;
}

} // namespace parallel
} // namespace sperner::kernels
