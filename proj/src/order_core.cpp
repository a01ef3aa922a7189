#include "sperner/order_core.hpp"

#include <algorithm>

#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {
namespace {

ElementSet closure_of(const BitMatrix& rows, const FinitePoset& p, const ElementSet& h) {
  const ElementSet s = normalized(p, h);
  std::vector<BitMatrix::Block> acc(rows.stride());
  for (auto i : s)
    bits::or_into(acc, rows.row(i));
  return bits::indices(acc);
}

void require_bruteforce(std::size_t n, const Limits& limits, const char* what) {
  const std::size_t bound = std::min(limits.max_bruteforce, kernels::kMaxMaskBits);
  if (n > bound)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds brute-force bound " + std::to_string(bound));
}

ElementSet from_mask(kernels::Mask m) {
  ElementSet s;
  for (; m; m &= m - 1)
    s.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return s;
}

} // namespace

ElementSet down_set(const FinitePoset& p, const ElementSet& h) { return closure_of(p.geq(), p, h); }

ElementSet up_set(const FinitePoset& p, const ElementSet& h) {
  return closure_of(p.relation(), p, h);
}

bool is_antichain(const FinitePoset& p, const ElementSet& h) {
  const ElementSet s = normalized(p, h);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (p.comparable(s[i], s[j]))
        return false;
  return true;
}

bool is_maximal_antichain(const FinitePoset& p, const ElementSet& a) {
  const ElementSet s = normalized(p, a);
  if (!is_antichain(p, s))
    return false;
  std::vector<BitMatrix::Block> reach(p.relation().stride());
  for (auto i : s) {
    bits::or_into(reach, p.relation().row(i));
    bits::or_into(reach, p.geq().row(i));
  }
  return bits::all_set(reach, p.size());
}

std::vector<ElementSet> enumerate_maximal_antichains(const FinitePoset& p, Limits limits) {
  const std::size_t n = p.size();
  require_bruteforce(n, limits, "maximal antichain enumeration");
  std::vector<kernels::Mask> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.comparable(i, j))
        comparable[i] |= kernels::Mask{1} << j;
  std::vector<ElementSet> out;
  for (auto m : kernels::parallel::maximal_antichain_masks(comparable))
    out.push_back(from_mask(m));
  return out;
}

std::optional<SplitPartition> try_split(const FinitePoset& p, const ElementSet& a,
                                        Limits limits) {
  const ElementSet s = normalized(p, a);
  if (!is_maximal_antichain(p, s))
    throw PreconditionError("try_split: " + p.format(s) + " is not a maximal antichain");
  require_bruteforce(s.size(), limits, "split search");
  auto rank = kernels::parallel::first_split(p.relation(), p.geq(), s);
  if (!rank)
    return std::nullopt;
  SplitPartition part;
  for (std::size_t i = 0; i < s.size(); ++i)
    (((*rank >> i) & 1u) ? part.down : part.up).push_back(s[i]);
  return part;
}

SplittingVerdict has_splitting_property(const FinitePoset& p, Limits limits) {
  SplittingVerdict v;
  for (auto& a : enumerate_maximal_antichains(p, limits)) {
    ++v.antichains_tested;
    if (!try_split(p, a, limits)) {
      v.holds = false;
      v.counterexample = std::move(a);
      break;
    }
  }
  return v;
}

ElementSet open_interval(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (x >= p.size() || y >= p.size())
    throw InputError("open_interval: element index out of range");
  ElementSet out;
  if (!p.lt(x, y))
    return out;
  auto up = p.relation().row(x);
  auto down = p.geq().row(y);
  std::vector<BitMatrix::Block> between(up.size());
  for (std::size_t k = 0; k < up.size(); ++k)
    between[k] = up[k] & down[k];
  for (auto z : bits::indices(between))
    if (z != x && z != y)
      out.push_back(z);
  return out;
}

DensityVerdict is_strongly_dense(const FinitePoset& p) {
  DensityVerdict v;
  if (auto bad = kernels::parallel::first_dense_violation(p.relation(), p.geq())) {
    v.holds = false;
    v.failing_interval = std::pair{bad->lower, bad->upper};
  }
  return v;
}

FinitePoset from_cover_relations(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second)
      throw InputError("duplicate element '" + elements[i] + "'");
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      throw InputError("undeclared element '" + name + "'");
    return it->second;
  };
  BitMatrix r(elements.size());
  for (const auto& [a, b] : covers) {
    const std::size_t i = lookup(a), j = lookup(b);
    if (i == j)
      throw InputError("cycle: '" + a + "' < '" + a + "'");
    r.set(i, j);
  }
  BitMatrix closed = kernels::parallel::closure(std::move(r));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (closed.test(i, j) && closed.test(j, i))
        throw InputError("cycle through '" + elements[i] + "' and '" + elements[j] + "'");
  return FinitePoset::from_relation(std::move(elements), std::move(closed));
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const FinitePoset& p) {
  const std::size_t n = p.size();
  BitMatrix strict = p.relation();
  for (std::size_t i = 0; i < n; ++i)
    strict.set(i, i, false);
  const BitMatrix two_step = kernels::parallel::multiply(strict, strict);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : bits::indices(strict.row(i)))
      if (!two_step.test(i, j))
        out.emplace_back(i, j);
  return out;
}

} // namespace sperner
