#include "sperner/celement.hpp"

#include <charconv>

#include "sperner/errors.hpp"

namespace sperner {

struct CElement::Node {
  unsigned level;
  std::optional<CElement> parent;
  Word word;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

CElement CElement::base(Word w) {
  const std::size_t h = mix(w.hash(), 0);
  return CElement(std::make_shared<const Node>(Node{0, std::nullopt, std::move(w), h}));
}

CElement CElement::root() { return base(Word{}); }

CElement CElement::make(unsigned level, const CElement& parent, Word w) {
  if (level == 0)
    throw InputError("level-0 elements have no parent");
  if (w.empty())
    throw InputError("element at level " + std::to_string(level) + " needs a non-empty word");
  if (parent.level() >= level)
    throw InputError("parent level " + std::to_string(parent.level()) +
                     " is not below element level " + std::to_string(level));
  const std::size_t h = mix(mix(w.hash(), level), parent.hash());
  return CElement(std::make_shared<const Node>(Node{level, parent, std::move(w), h}));
}

unsigned CElement::level() const noexcept { return node_->level; }
bool CElement::has_parent() const noexcept { return node_->parent.has_value(); }

const CElement& CElement::parent() const {
  if (!node_->parent)
    throw PreconditionError("level-0 element has no parent");
  return *node_->parent;
}

const Word& CElement::word() const noexcept { return node_->word; }
std::size_t CElement::hash() const noexcept { return node_->hash; }

bool operator==(const CElement& a, const CElement& b) noexcept {
  if (a.node_ == b.node_)
    return true;
  if (a.node_->hash != b.node_->hash || a.node_->level != b.node_->level ||
      a.node_->word != b.node_->word)
    return false;
  if (!a.node_->parent)
    return true;
  return *a.node_->parent == *b.node_->parent;
}

std::string render_celement(const CElement& e) {
  const std::string w = e.word().empty() ? "e" : e.word().bits();
  if (e.level() == 0)
    return "(0," + w + ")";
  return "(" + std::to_string(e.level()) + "," + render_celement(e.parent()) + "," + w + ")";
}

namespace {

class LiteralParser {
public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  CElement parse() {
    CElement e = element();
    if (pos_ != s_.size())
      fail("trailing characters");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned level() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9')
      ++pos_;
    if (start == pos_)
      fail("expected level");
    if (s_[start] == '0' && pos_ - start > 1) {
      pos_ = start;
      fail("level has a leading zero");
    }
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("level out of range");
    }
    return v;
  }

  Word word() {
    if (pos_ < s_.size() && s_[pos_] == 'e') {
      ++pos_;
      return Word{};
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1'))
      ++pos_;
    if (start == pos_)
      fail("expected word ('e' or bits)");
    return Word(s_.substr(start, pos_ - start));
  }

  CElement element() {
    expect('(');
    const std::size_t level_pos = pos_;
    const unsigned lvl = level();
    expect(',');
    if (lvl == 0) {
      Word w = word();
      expect(')');
      return CElement::base(std::move(w));
    }
    CElement parent = element();
    expect(',');
    const std::size_t word_pos = pos_;
    Word w = word();
    expect(')');
    if (w.empty())
      throw InputError("empty word at level " + std::to_string(lvl) + " (position " +
                       std::to_string(word_pos) + ")");
    if (parent.level() >= lvl)
      throw InputError("parent level " + std::to_string(parent.level()) +
                       " is not below level " + std::to_string(lvl) + " (position " +
                       std::to_string(level_pos) + ")");
    return CElement::make(lvl, parent, std::move(w));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

CElement parse_celement(std::string_view text) { return LiteralParser(text).parse(); }

} // namespace sperner
