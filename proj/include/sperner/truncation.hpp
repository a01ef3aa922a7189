#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sperner/celement.hpp"
#include "sperner/finite_poset.hpp"

namespace sperner {

/// Finite fragment of C: stages up to max_level, every word (including every
/// ancestor's word) of length at most max_depth.
struct TruncationSpec {
  unsigned max_level = 0;
  unsigned max_depth = 0;
};

inline constexpr std::size_t kDefaultMaxTruncation = 4096;

/// (2^(d+1) - 1)^(n+1), or SIZE_MAX on overflow.
std::size_t truncation_size(TruncationSpec spec) noexcept;

class Truncation {
public:
  TruncationSpec spec() const noexcept { return spec_; }
  const std::vector<CElement>& elements() const noexcept { return elements_; }
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Throws InputError if e is not in the fragment.
  std::size_t index_of(const CElement& e) const { return poset_.index_of(render_celement(e)); }
  bool contains(const CElement& e) const;

private:
  friend Truncation truncate(TruncationSpec, std::size_t);
  TruncationSpec spec_;
  std::vector<CElement> elements_;
  FinitePoset poset_;
};

/// Elements ordered by level, then parent index, then shortlex word; the
/// relation is c_leq. Throws CapacityError above max_elements.
Truncation truncate(TruncationSpec spec, std::size_t max_elements = kDefaultMaxTruncation);

} // namespace sperner
