#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "sperner/word.hpp"

namespace sperner {

/// An element of C: a triple (parent, word, level).
///
/// Level-0 elements have no parent and any word. An element at level c >= 1
/// hangs below a parent of level < c and carries a non-empty word. Terms are
/// immutable and shared; equality is structural.
class CElement {
public:
  /// (∅, w, 0)
  static CElement base(Word w);
  /// (∅, ⟨⟩, 0)
  static CElement root();
  /// Throws InputError if level == 0, the word is empty, or the parent's
  /// level is not below `level`.
  static CElement make(unsigned level, const CElement& parent, Word w);

  unsigned level() const noexcept;
  bool has_parent() const noexcept;
  /// Precondition: level() >= 1.
  const CElement& parent() const;
  const Word& word() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const CElement& a, const CElement& b) noexcept;

private:
  struct Node;
  explicit CElement(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct CElementHash {
  std::size_t operator()(const CElement& e) const noexcept { return e.hash(); }
};

/// Literal grammar:
///   elem  ::= "(0," word ")" | "(" level "," elem "," word ")"
///   word  ::= "e" | bit+
///   level ::= decimal >= 1
std::string render_celement(const CElement& e);

/// Throws ParseError on syntax errors and InputError on invariant violations.
CElement parse_celement(std::string_view text);

} // namespace sperner
