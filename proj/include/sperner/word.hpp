#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sperner {

/// Finite binary word, ordered by the initial-segment relation.
class Word {
public:
  Word() = default;
  /// From a string over {0,1}; "" is the empty word. Throws InputError.
  explicit Word(std::string_view bits);

  /// 1^i 0
  static Word ones_then_zero(std::size_t i);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  Word concat(const Word& tail) const;

  /// Initial-segment order: *this ⊴ other.
  bool is_prefix_of(const Word& other) const noexcept;

  /// Bits as '0'/'1' characters; empty string for the empty word.
  std::string bits() const;
  std::size_t hash() const noexcept;

  bool operator==(const Word&) const = default;
  /// Shortlex: length first, then lexicographic.
  std::strong_ordering operator<=>(const Word& other) const noexcept;

private:
  std::vector<bool> bits_;
};

/// All words of length <= max_len in shortlex order.
std::vector<Word> words_up_to(std::size_t max_len);

} // namespace sperner
