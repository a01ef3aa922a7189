#pragma once

#include <cstddef>
#include <vector>

#include "sperner/celement.hpp"

namespace sperner {

// The order on C. At stage m = n+1, a pair (a1,b1,c1) <= (a2,b2,c2) holds iff
//   (i)   c1, c2 <= n          and the pair is ordered at stage n;
//   (ii)  c1 <= n, c2 = n+1    and (a1,b1,c1) <=_n a2;
//   (iii) c1 = n+1, c2 <= n    and a1 <_n (a2,b2,c2);
//   (iv)  c1 = c2 = n+1        and a1 = a2 and b1 is a prefix of b2;
//   (v)   c1 = c2 = n+1        and a1 <_n a2.
// Stage 0 compares words by prefix.

/// x <= y, evaluated at the least stage holding both and recursing on the
/// least stage of each sub-pair.
bool c_leq(const CElement& x, const CElement& y);
bool c_lt(const CElement& x, const CElement& y);

/// x <=_n y, descending one stage at a time through rule (i). Must agree with
/// c_leq for every admissible n. Throws PreconditionError if
/// n < max(x.level(), y.level()).
bool c_leq_at(unsigned n, const CElement& x, const CElement& y);

enum class Comparison { less, greater, equal, incomparable };
Comparison compare(const CElement& x, const CElement& y);
const char* to_symbol(Comparison c);

/// Infinite antichain inside the open interval (lower, upper). Element i is
/// (anchor, prefix ⌢ 1^i ⌢ 0, level) for fixed anchor, prefix and level chosen
/// by the shape of the interval.
class IntervalWitnessStream {
public:
  /// Throws PreconditionError unless lower < upper.
  IntervalWitnessStream(CElement lower, CElement upper);

  const CElement& lower() const noexcept { return lower_; }
  const CElement& upper() const noexcept { return upper_; }

  CElement operator[](std::size_t i) const;
  std::vector<CElement> take(std::size_t k) const;

private:
  CElement lower_;
  CElement upper_;
  CElement anchor_;
  Word prefix_;
  unsigned level_;
};

std::vector<CElement> antichain_in_interval(const CElement& x, const CElement& y, std::size_t k);

} // namespace sperner
