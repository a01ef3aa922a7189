#include "sperner/c_order.hpp"

#include <algorithm>

#include "sperner/errors.hpp"

namespace sperner {

bool c_leq(const CElement& x, const CElement& y) {
  const unsigned lx = x.level(), ly = y.level();
  const unsigned m = std::max(lx, ly);
  if (m == 0)
    return x.word().is_prefix_of(y.word());
  if (lx < m) // (ii)
    return c_leq(x, y.parent());
  if (ly < m) // (iii)
    return c_lt(x.parent(), y);
  // (iv) or (v)
  if (x.parent() == y.parent())
    return x.word().is_prefix_of(y.word());
  return c_lt(x.parent(), y.parent());
}

bool c_lt(const CElement& x, const CElement& y) { return c_leq(x, y) && !(x == y); }

namespace {

bool lt_at(unsigned n, const CElement& x, const CElement& y) {
  return c_leq_at(n, x, y) && !(x == y);
}

} // namespace

bool c_leq_at(unsigned n, const CElement& x, const CElement& y) {
  const unsigned lx = x.level(), ly = y.level();
  if (n < std::max(lx, ly))
    throw PreconditionError("c_leq_at: stage " + std::to_string(n) +
                            " is below the elements' levels");
  if (n == 0)
    return x.word().is_prefix_of(y.word());
  const unsigned prev = n - 1;
  if (lx < n && ly < n)
    return c_leq_at(prev, x, y);
  if (lx < n)
    return c_leq_at(prev, x, y.parent());
  if (ly < n)
    return lt_at(prev, x.parent(), y);
  if (x.parent() == y.parent() && x.word().is_prefix_of(y.word()))
    return true;
  return lt_at(prev, x.parent(), y.parent());
}

Comparison compare(const CElement& x, const CElement& y) {
  if (x == y)
    return Comparison::equal;
  if (c_leq(x, y))
    return Comparison::less;
  if (c_leq(y, x))
    return Comparison::greater;
  return Comparison::incomparable;
}

const char* to_symbol(Comparison c) {
  switch (c) {
  case Comparison::less:
    return "<";
  case Comparison::greater:
    return ">";
  case Comparison::equal:
    return "=";
  case Comparison::incomparable:
    return "incomparable";
  }
  return "?";
}

IntervalWitnessStream::IntervalWitnessStream(CElement lower, CElement upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), anchor_(lower_), level_(0) {
  if (!c_lt(lower_, upper_))
    throw PreconditionError("antichain_in_interval: " + render_celement(lower_) +
                            " is not strictly below " + render_celement(upper_));
  // Descend while the upper end sits at the top stage strictly above the
  // lower end's stage and its parent still lies strictly above the lower end.
  CElement x = lower_;
  CElement y = upper_;
  while (y.level() > x.level() && !(y.parent() == x))
    y = y.parent();
  const unsigned m = std::max(x.level(), y.level());
  if (x.level() == m && y.level() < m) {
    anchor_ = x.parent();
    prefix_ = x.word();
    level_ = m;
  } else {
    anchor_ = x;
    level_ = m + 1;
  }
}

CElement IntervalWitnessStream::operator[](std::size_t i) const {
  return CElement::make(level_, anchor_, prefix_.concat(Word::ones_then_zero(i)));
}

std::vector<CElement> IntervalWitnessStream::take(std::size_t k) const {
  std::vector<CElement> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back((*this)[i]);
  return out;
}

std::vector<CElement> antichain_in_interval(const CElement& x, const CElement& y, std::size_t k) {
  return IntervalWitnessStream(x, y).take(k);
}

} // namespace sperner
