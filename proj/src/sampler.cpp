#include "sperner/sampler.hpp"

#include <random>

#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {

void SampleConfig::validate() const {
  if (size == 0)
    throw InputError("sample size must be at least 1");
  if (count == 0)
    throw InputError("sample count must be at least 1");
  if (!(edge_density >= 0.0 && edge_density <= 1.0))
    throw InputError("edge density must lie in [0, 1]");
}

SamplingError::SamplingError(std::size_t found, std::size_t wanted, std::size_t draws)
    : Error("draw budget of " + std::to_string(draws) + " exhausted: found " +
            std::to_string(found) + " of " + std::to_string(wanted) +
            " strongly dense posets"),
      found_(found) {}

FinitePoset random_poset(const SampleConfig& config, std::uint64_t draw) {
  config.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
  std::mt19937_64 gen(seq);
  // Uniform [0,1) from the top 53 bits; std distributions are not portable.
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  const std::size_t n = config.size;
  BitMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform() < config.edge_density)
        r.set(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i));
  return FinitePoset::from_relation(std::move(names), kernels::parallel::closure(std::move(r)));
}

std::vector<Sample> sample_strongly_dense(const SampleConfig& config) {
  config.validate();
  const std::size_t budget = kDrawBudgetPerSample * config.count;
  constexpr std::size_t kBatch = 256;
  std::vector<Sample> accepted;
  for (std::size_t start = 0; start < budget && accepted.size() < config.count; start += kBatch) {
    const std::size_t len = std::min(kBatch, budget - start);
    std::vector<std::optional<FinitePoset>> batch(len);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(len); ++k) {
      FinitePoset p = random_poset(config, start + static_cast<std::uint64_t>(k));
      if (is_strongly_dense(p).holds)
        batch[static_cast<std::size_t>(k)] = std::move(p);
    }
    for (std::size_t k = 0; k < len && accepted.size() < config.count; ++k)
      if (batch[k])
        accepted.push_back({start + k, std::move(*batch[k])});
  }
  if (accepted.size() < config.count)
    throw SamplingError(accepted.size(), config.count, budget);
  return accepted;
}

AegReport verify_aeg(const SampleConfig& config, Limits limits) {
  config.validate();
  if (config.size > limits.max_bruteforce)
    throw CapacityError("sample size " + std::to_string(config.size) +
                        " exceeds brute-force bound " + std::to_string(limits.max_bruteforce));
  AegReport report;
  for (const auto& s : sample_strongly_dense(config)) {
    const SplittingVerdict v = has_splitting_property(s.poset, limits);
    SampleOutcome o{s.draw, s.poset.size(), v.antichains_tested, v.holds, std::nullopt};
    if (!v.holds) {
      o.counterexample = s.poset.format(*v.counterexample);
      ++report.failures;
    }
    report.antichains_tested += v.antichains_tested;
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

std::string AegReport::to_text() const {
  std::string out;
  for (const auto& o : outcomes) {
    out += "draw=" + std::to_string(o.draw) + " n=" + std::to_string(o.size) +
           " maximal_antichains=" + std::to_string(o.maximal_antichains) +
           " all_split=" + (o.all_split ? "true" : "false");
    if (o.counterexample)
      out += " counterexample=" + *o.counterexample;
    out += "\n";
  }
  out += "samples=" + std::to_string(outcomes.size()) +
         " maximal_antichains=" + std::to_string(antichains_tested) +
         " failures=" + std::to_string(failures) + (passed() ? " pass" : " FAIL") + "\n";
  return out;
}

} // namespace sperner
