#include "sperner/word.hpp"

#include <algorithm>
#include <functional>

#include "sperner/errors.hpp"

namespace sperner {

Word::Word(std::string_view bits) {
  bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw InputError(std::string("invalid bit '") + c + "' in word");
    bits_.push_back(c == '1');
  }
}

Word Word::ones_then_zero(std::size_t i) {
  Word w;
  w.bits_.assign(i, true);
  w.bits_.push_back(false);
  return w;
}

Word Word::concat(const Word& tail) const {
  Word w = *this;
  w.bits_.insert(w.bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return w;
}

bool Word::is_prefix_of(const Word& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string Word::bits() const {
  std::string s;
  for (bool b : bits_)
    s += b ? '1' : '0';
  return s;
}

std::size_t Word::hash() const noexcept { return std::hash<std::vector<bool>>{}(bits_); }

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
  if (auto c = bits_.size() <=> other.bits_.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(bits_.begin(), bits_.end(), other.bits_.begin(),
                                                other.bits_.end());
}

std::vector<Word> words_up_to(std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t first_of_len = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t last = out.size();
    for (std::size_t k = first_of_len; k < last; ++k)
      for (const char* bit : {"0", "1"})
        out.push_back(out[k].concat(Word(bit)));
    first_of_len = last;
  }
  return out;
}

} // namespace sperner
