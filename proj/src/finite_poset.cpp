#include "sperner/finite_poset.hpp"

#include <algorithm>

#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {

FinitePoset FinitePoset::from_relation(std::vector<std::string> names, BitMatrix leq) {
  const std::size_t n = names.size();
  if (leq.size() != n)
    throw InputError("relation has " + std::to_string(leq.size()) + " rows for " +
                     std::to_string(n) + " elements");
  FinitePoset p;
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty())
      throw InputError("empty element name");
    if (!p.index_.emplace(names[i], i).second)
      throw InputError("duplicate element '" + names[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!leq.test(i, i))
      throw InputError("relation is not reflexive at '" + names[i] + "'");
  BitMatrix geq = leq.transposed();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq.test(i, j) && geq.test(i, j))
        throw InputError("relation is not antisymmetric: '" + names[i] + "' and '" + names[j] +
                         "'");
  if (kernels::parallel::multiply(leq, leq) != leq)
    throw InputError("relation is not transitive");
  p.names_ = std::move(names);
  p.leq_ = std::move(leq);
  p.geq_ = std::move(geq);
  return p;
}

std::size_t FinitePoset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw InputError("unknown element '" + std::string(name) + "'");
  return it->second;
}

ElementSet FinitePoset::set_of(std::initializer_list<std::string_view> names) const {
  ElementSet s;
  for (auto n : names)
    s.push_back(index_of(n));
  return normalized(*this, std::move(s));
}

ElementSet FinitePoset::set_of(const std::vector<std::string>& names) const {
  ElementSet s;
  for (const auto& n : names)
    s.push_back(index_of(n));
  return normalized(*this, std::move(s));
}

std::string FinitePoset::format(const ElementSet& s) const {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k)
      out += ',';
    out += name(s[k]);
  }
  return out + "}";
}

ElementSet normalized(const FinitePoset& p, ElementSet s) {
  for (auto i : s)
    if (i >= p.size())
      throw InputError("element index " + std::to_string(i) + " out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

} // namespace sperner
