#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sperner/bit_matrix.hpp"

namespace sperner {

/// Element subset, held as ascending element indices.
using ElementSet = std::vector<std::size_t>;

/// Finite partial order over named elements, stored as a dense relation
/// matrix. Immutable once built; construction checks reflexivity,
/// antisymmetry and transitivity.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Throws InputError on duplicate names, a size mismatch, or a relation
  /// that is not a partial order.
  static FinitePoset from_relation(std::vector<std::string> names, BitMatrix leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Throws InputError for an unknown name.
  std::size_t index_of(std::string_view name) const;
  ElementSet set_of(std::initializer_list<std::string_view> names) const;
  ElementSet set_of(const std::vector<std::string>& names) const;

  bool leq(std::size_t a, std::size_t b) const noexcept { return leq_.test(a, b); }
  bool lt(std::size_t a, std::size_t b) const noexcept { return a != b && leq_.test(a, b); }
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return leq_.test(a, b) || leq_.test(b, a);
  }

  /// Row a: everything above a. Row a of geq(): everything below a.
  const BitMatrix& relation() const noexcept { return leq_; }
  const BitMatrix& geq() const noexcept { return geq_; }

  /// Renders a set as "{a,b,c}".
  std::string format(const ElementSet& s) const;

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  BitMatrix leq_;
  BitMatrix geq_;
};

/// Sorts and deduplicates; throws InputError if any index is out of range.
ElementSet normalized(const FinitePoset& p, ElementSet s);

} // namespace sperner
