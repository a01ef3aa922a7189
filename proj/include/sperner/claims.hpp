#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sperner/celement.hpp"
#include "sperner/truncation.hpp"

namespace sperner {

/// The level-1 pair x̂ = (root, ⟨0⟩, 1), ŷ = (root, ⟨1⟩, 1).
struct AntichainPair {
  CElement x;
  CElement y;
};

AntichainPair non_splitting_antichain();

struct MaximalityReport {
  TruncationSpec spec;
  std::size_t elements_checked = 0;
  std::optional<CElement> counterexample;
  bool passed() const noexcept { return !counterexample; }
};

/// Checks that every element of the truncation is comparable to x̂ or ŷ.
MaximalityReport verify_antichain_maximality(TruncationSpec spec,
                                             std::size_t max_elements = kDefaultMaxTruncation);

struct WitnessCheck {
  std::string statement;
  bool holds = false;
};

/// One partition {D, U} of {x̂, ŷ} and the element left outside D(D) ∪ U(U).
struct PartitionRefutation {
  std::vector<CElement> down;
  std::vector<CElement> up;
  CElement witness;
  bool refuted = false;
};

struct NonSplittingReport {
  std::vector<WitnessCheck> witness_checks;
  std::vector<PartitionRefutation> partitions;
  bool passed() const noexcept;
};

/// Certifies with c_leq alone that no partition of {x̂, ŷ} splits C, using
/// w1 = (root, ⟨0,1⟩, 1), w2 = (root, ⟨1,1⟩, 1) and the root.
NonSplittingReport verify_antichain_non_splitting();

std::string to_text(const MaximalityReport& r);
std::string to_text(const NonSplittingReport& r);

} // namespace sperner
