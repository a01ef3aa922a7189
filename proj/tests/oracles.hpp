#pragma once

// Test-only oracles. Each one recomputes a quantity by the most literal route
// available and shares no code path with the kernel it checks.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sperner/bit_matrix.hpp"
#include "sperner/celement.hpp"
#include "sperner/finite_poset.hpp"

namespace oracle {

using Table = std::vector<std::vector<bool>>;

inline Table table_of(const sperner::FinitePoset& p) {
  Table t(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      t[i][j] = p.leq(i, j);
  return t;
}

/// Floyd-Warshall reflexive-transitive closure.
inline Table warshall(Table r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j])
            r[i][j] = true;
  return r;
}

inline bool comparable(const Table& t, std::size_t a, std::size_t b) { return t[a][b] || t[b][a]; }

inline bool is_antichain(const Table& t, const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && comparable(t, s[i], s[j]))
        return false;
  return true;
}

/// Maximal in the literal sense: no strictly larger antichain contains it.
/// Checking one-element extensions suffices since antichains are closed
/// under subsets.
inline bool is_maximal_by_extension(const Table& t, const std::vector<std::size_t>& s) {
  if (!is_antichain(t, s))
    return false;
  for (std::size_t z = 0; z < t.size(); ++z) {
    if (std::find(s.begin(), s.end(), z) != s.end())
      continue;
    auto bigger = s;
    bigger.push_back(z);
    if (is_antichain(t, bigger))
      return false;
  }
  return true;
}

/// All maximal antichains, in std::vector lexicographic order.
inline std::vector<std::vector<std::size_t>> maximal_antichains(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1u)
        s.push_back(i);
    if (is_maximal_by_extension(t, s))
      out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool covers_everything(const Table& t, const std::vector<std::size_t>& down,
                              const std::vector<std::size_t>& up) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    bool hit = false;
    for (auto d : down)
      hit = hit || t[x][d];
    for (auto u : up)
      hit = hit || t[u][x];
    if (!hit)
      return false;
  }
  return true;
}

/// Number of partitions {D, U} of a that split, visited in reflected Gray
/// code order (a different order from the library's rank scan).
inline std::size_t count_splits(const Table& t, const std::vector<std::size_t>& a) {
  std::size_t hits = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << a.size()); ++k) {
    const std::uint64_t g = k ^ (k >> 1);
    std::vector<std::size_t> down, up;
    for (std::size_t i = 0; i < a.size(); ++i)
      ((g >> i) & 1u ? down : up).push_back(a[i]);
    hits += covers_everything(t, down, up);
  }
  return hits;
}

inline bool strongly_dense(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !t[x][y])
        continue;
      std::vector<std::size_t> between;
      for (std::size_t z = 0; z < n; ++z)
        if (z != x && z != y && t[x][z] && t[z][y])
          between.push_back(z);
      if (between.empty())
        continue;
      bool ok = false;
      for (auto a : between)
        for (auto b : between)
          ok = ok || !comparable(t, a, b);
      if (!ok)
        return false;
    }
  return true;
}

/// The order on a parent-closed fragment of C, built stage by stage as a
/// table: stage 0 by string prefix, stage s from stage s-1 via rules
/// (i)-(v) with parents looked up by index. elements must be sorted by level.
inline Table staged_c_order(const std::vector<sperner::CElement>& elements) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(sperner::render_celement(elements[i]), i);
  std::vector<unsigned> level(n);
  std::vector<std::string> word(n);
  std::vector<std::size_t> parent(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    level[i] = elements[i].level();
    word[i] = elements[i].word().bits();
    if (level[i] > 0)
      parent[i] = index.at(sperner::render_celement(elements[i].parent()));
  }
  auto prefix = [&](std::size_t a, std::size_t b) {
    return word[b].compare(0, word[a].size(), word[a]) == 0 && word[a].size() <= word[b].size();
  };
  const unsigned top = n ? *std::max_element(level.begin(), level.end()) : 0;

  Table t(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (level[a] == 0 && level[b] == 0)
        t[a][b] = prefix(a, b);
  for (unsigned s = 1; s <= top; ++s) {
    Table next = t; // rule (i) keeps every pair below stage s
    auto lt = [&](std::size_t a, std::size_t b) { return a != b && t[a][b]; };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool a_new = level[a] == s, b_new = level[b] == s;
        if (level[a] > s || level[b] > s || (!a_new && !b_new))
          continue;
        bool v = false;
        if (!a_new && b_new)
          v = t[a][parent[b]];
        else if (a_new && !b_new)
          v = lt(parent[a], b);
        else
          v = (parent[a] == parent[b] && prefix(a, b)) || lt(parent[a], parent[b]);
        next[a][b] = v;
      }
    t = std::move(next);
  }
  return t;
}

} // namespace oracle
