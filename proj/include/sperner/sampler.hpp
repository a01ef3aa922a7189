#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/errors.hpp"
#include "sperner/finite_poset.hpp"
#include "sperner/order_core.hpp"

namespace sperner {

struct SampleConfig {
  std::size_t size = 1;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double edge_density = 0.3;

  /// Throws InputError on size 0, count 0, or a density outside [0, 1].
  void validate() const;
};

/// Draws per accepted sample before giving up.
inline constexpr std::size_t kDrawBudgetPerSample = 10'000;

/// Thrown when the draw budget runs out before `count` samples are accepted.
class SamplingError : public Error {
public:
  SamplingError(std::size_t found, std::size_t wanted, std::size_t draws);
  std::size_t found() const noexcept { return found_; }

private:
  std::size_t found_;
};

/// Deterministic in (seed, draw): each pair i < j of v0..v{size-1} becomes a
/// cover pair with probability edge_density, then the closure is taken.
FinitePoset random_poset(const SampleConfig& config, std::uint64_t draw);

struct Sample {
  std::uint64_t draw;
  FinitePoset poset;
};

/// The first `count` strongly dense draws, in draw order.
std::vector<Sample> sample_strongly_dense(const SampleConfig& config);

struct SampleOutcome {
  std::uint64_t draw;
  std::size_t size;
  std::size_t maximal_antichains;
  bool all_split;
  std::optional<std::string> counterexample;
};

struct AegReport {
  std::vector<SampleOutcome> outcomes;
  std::size_t antichains_tested = 0;
  std::size_t failures = 0;
  bool passed() const noexcept { return failures == 0; }
  std::string to_text() const;
};

/// Samples strongly dense posets and runs has_splitting_property on each.
/// Throws CapacityError if config.size exceeds limits.max_bruteforce.
AegReport verify_aeg(const SampleConfig& config, Limits limits = {});

} // namespace sperner
