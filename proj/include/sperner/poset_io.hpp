#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sperner/finite_poset.hpp"
#include "sperner/order_core.hpp"

namespace sperner {

// Line-oriented poset text format:
//
//   # comment
//   elem <name>
//   cover <a> <b>      # a < b
//
// Names are whitespace-free tokens. The order is the reflexive-transitive
// closure of the cover lines.

FinitePoset parse_poset_text(std::string_view text);
FinitePoset read_poset_file(const std::string& path);

/// elem lines in index order, then cover lines for the Hasse diagram.
std::string write_poset_text(const FinitePoset& p);

/// Graphviz digraph of the Hasse diagram. When a partition is given its down
/// part is filled blue and its up part orange.
std::string write_dot(const FinitePoset& p, const std::optional<SplitPartition>& split = {});

/// Reads back the DOT subset produced by write_dot: quoted node statements
/// and quoted `"a" -> "b"` edges. Attributes are ignored.
FinitePoset parse_dot(std::string_view text);

} // namespace sperner
