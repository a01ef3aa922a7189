#include "sperner/claims.hpp"

#include "sperner/c_order.hpp"

namespace sperner {
namespace {

std::string format(const std::vector<CElement>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + render_celement(s[i]);
  return out + "}";
}

bool outside_split(const CElement& w, const std::vector<CElement>& down,
                   const std::vector<CElement>& up) {
  for (const auto& d : down)
    if (c_leq(w, d))
      return false;
  for (const auto& u : up)
    if (c_leq(u, w))
      return false;
  return true;
}

} // namespace

AntichainPair non_splitting_antichain() {
  const CElement root = CElement::root();
  return {CElement::make(1, root, Word("0")), CElement::make(1, root, Word("1"))};
}

MaximalityReport verify_antichain_maximality(TruncationSpec spec, std::size_t max_elements) {
  const auto [x, y] = non_splitting_antichain();
  const Truncation t = truncate(spec, max_elements);
  MaximalityReport r;
  r.spec = spec;
  for (const auto& z : t.elements()) {
    ++r.elements_checked;
    if (!(c_leq(x, z) || c_leq(y, z) || c_leq(z, x) || c_leq(z, y))) {
      r.counterexample = z;
      break;
    }
  }
  return r;
}

bool NonSplittingReport::passed() const noexcept {
  for (const auto& c : witness_checks)
    if (!c.holds)
      return false;
  for (const auto& p : partitions)
    if (!p.refuted)
      return false;
  return partitions.size() == 4;
}

NonSplittingReport verify_antichain_non_splitting() {
  const auto [x, y] = non_splitting_antichain();
  const CElement root = CElement::root();
  const CElement w1 = CElement::make(1, root, Word("01"));
  const CElement w2 = CElement::make(1, root, Word("11"));
  const std::string xs = render_celement(x), ys = render_celement(y);
  const std::string w1s = render_celement(w1), w2s = render_celement(w2);

  NonSplittingReport r;
  auto check = [&](std::string statement, bool holds) {
    r.witness_checks.push_back({std::move(statement), holds});
  };
  check(w1s + " >= " + xs, c_leq(x, w1));
  check("not " + w1s + " >= " + ys, !c_leq(y, w1));
  check("not " + w1s + " <= " + xs, !c_leq(w1, x));
  check(w2s + " >= " + ys, c_leq(y, w2));
  check("not " + w2s + " >= " + xs, !c_leq(x, w2));
  check("not " + w2s + " <= " + ys, !c_leq(w2, y));
  check("not (0,e) >= " + xs, !c_leq(x, root));
  check("not (0,e) >= " + ys, !c_leq(y, root));

  auto refute = [&](std::vector<CElement> down, std::vector<CElement> up, const CElement& w) {
    const bool ok = outside_split(w, down, up);
    r.partitions.push_back({std::move(down), std::move(up), w, ok});
  };
  refute({}, {x, y}, root);
  refute({x, y}, {}, w1);
  refute({x}, {y}, w1);
  refute({y}, {x}, w2);
  return r;
}

std::string to_text(const MaximalityReport& r) {
  std::string out = "maximality levels=" + std::to_string(r.spec.max_level) +
                    " depth=" + std::to_string(r.spec.max_depth) +
                    " elements_checked=" + std::to_string(r.elements_checked);
  if (r.counterexample)
    out += " counterexample=" + render_celement(*r.counterexample);
  return out + (r.passed() ? " pass\n" : " FAIL\n");
}

std::string to_text(const NonSplittingReport& r) {
  std::string out;
  for (const auto& c : r.witness_checks)
    out += std::string(c.holds ? "holds " : "FAILS ") + c.statement + "\n";
  for (const auto& p : r.partitions)
    out += "partition D=" + format(p.down) + " U=" + format(p.up) +
           (p.refuted ? " refuted" : " NOT refuted") + " w=" + render_celement(p.witness) + "\n";
  out += "non-splitting " + std::string(r.passed() ? "pass" : "FAIL") + " partitions_refuted=";
  std::size_t n = 0;
  for (const auto& p : r.partitions)
    n += p.refuted;
  return out + std::to_string(n) + "\n";
}

} // namespace sperner
