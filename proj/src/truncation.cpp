#include "sperner/truncation.hpp"

#include <limits>

#include "sperner/c_order.hpp"
#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {

std::size_t truncation_size(TruncationSpec spec) noexcept {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (spec.max_depth + 1 >= 64)
    return kMax;
  const std::size_t words = (std::size_t{1} << (spec.max_depth + 1)) - 1;
  std::size_t total = 1;
  for (unsigned k = 0; k <= spec.max_level; ++k) {
    if (total > kMax / words)
      return kMax;
    total *= words;
  }
  return total;
}

bool Truncation::contains(const CElement& e) const {
  try {
    index_of(e);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Truncation truncate(TruncationSpec spec, std::size_t max_elements) {
  const std::size_t expected = truncation_size(spec);
  if (expected > max_elements)
    throw CapacityError("truncation (" + std::to_string(spec.max_level) + "," +
                        std::to_string(spec.max_depth) + ") has more than " +
                        std::to_string(max_elements) + " elements");
  Truncation t;
  t.spec_ = spec;
  const auto words = words_up_to(spec.max_depth);
  t.elements_.reserve(expected);
  for (const auto& w : words)
    t.elements_.push_back(CElement::base(w));
  for (unsigned level = 1; level <= spec.max_level; ++level) {
    const std::size_t parents = t.elements_.size();
    for (std::size_t p = 0; p < parents; ++p)
      for (std::size_t k = 1; k < words.size(); ++k)
        t.elements_.push_back(CElement::make(level, t.elements_[p], words[k]));
  }

  std::vector<std::string> names;
  names.reserve(t.elements_.size());
  for (const auto& e : t.elements_)
    names.push_back(render_celement(e));
  const auto& el = t.elements_;
  BitMatrix leq = kernels::parallel::fill(el.size(), [&](std::size_t i, std::size_t j) {
    return c_leq(el[i], el[j]);
  });
  t.poset_ = FinitePoset::from_relation(std::move(names), std::move(leq));
  return t;
}

} // namespace sperner
