#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sperner/finite_poset.hpp"

namespace sperner {

/// Bounds on exhaustive subset searches.
struct Limits {
  /// Largest poset for maximal-antichain enumeration, and largest antichain
  /// for the 2^k partition search.
  std::size_t max_bruteforce = 20;
};

/// A partition {down, up} of an antichain. Either part may be empty.
struct SplitPartition {
  ElementSet down;
  ElementSet up;
  bool operator==(const SplitPartition&) const = default;
};

ElementSet down_set(const FinitePoset& p, const ElementSet& h);
ElementSet up_set(const FinitePoset& p, const ElementSet& h);

bool is_antichain(const FinitePoset& p, const ElementSet& h);

/// An antichain such that every element outside it is comparable to a member.
bool is_maximal_antichain(const FinitePoset& p, const ElementSet& a);

/// Every maximal antichain once, in lexicographic order of index lists.
/// Throws CapacityError when p.size() exceeds limits.max_bruteforce.
std::vector<ElementSet> enumerate_maximal_antichains(const FinitePoset& p, Limits limits = {});

/// Searches all 2^|a| partitions in rank order (bit i of the rank puts the
/// i-th member of a into the down part) and returns the first one with
/// down_set(D) ∪ up_set(U) = P.
std::optional<SplitPartition> try_split(const FinitePoset& p, const ElementSet& a,
                                        Limits limits = {});

struct SplittingVerdict {
  bool holds = true;
  std::size_t antichains_tested = 0;
  std::optional<ElementSet> counterexample;
};

SplittingVerdict has_splitting_property(const FinitePoset& p, Limits limits = {});

/// {z : x < z < y}; empty unless x < y.
ElementSet open_interval(const FinitePoset& p, std::size_t x, std::size_t y);

struct DensityVerdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_interval;
};

/// Every non-empty open interval holds two incomparable elements. Reports the
/// first failing (x, y) in row-major order.
DensityVerdict is_strongly_dense(const FinitePoset& p);

/// Reflexive-transitive closure of the given pairs a < b. Throws InputError
/// on undeclared elements or on a cycle.
FinitePoset from_cover_relations(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

/// Hasse diagram: pairs (a, b) with a < b and nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const FinitePoset& p);

} // namespace sperner
