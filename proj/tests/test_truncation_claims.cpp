#include <doctest.h>

#include "sperner/c_order.hpp"
#include "sperner/claims.hpp"
#include "sperner/errors.hpp"
#include "sperner/order_core.hpp"
#include "sperner/truncation.hpp"

using namespace sperner;

TEST_CASE("truncation sizes") {
  CHECK(truncate({0, 1}).size() == 3);
  CHECK(truncate({2, 1}).size() == 27);
  CHECK(truncate({0, 0}).size() == 1);
  CHECK(truncate({0, 0}).elements()[0] == CElement::root());
  CHECK(truncate({2, 2}).size() == 343);
  CHECK(truncation_size({3, 1}) == 81);
  CHECK(truncation_size({5, 0}) == 1);
  CHECK(truncation_size({2, 70}) == SIZE_MAX);
  // recurrence |T_{k+1}| = |T_k| (2^{d+1} - 2) + |T_k|
  for (unsigned d = 0; d <= 3; ++d) {
    std::size_t count = (std::size_t{1} << (d + 1)) - 1;
    for (unsigned n = 0; n <= 3; ++n) {
      CHECK(truncation_size({n, d}) == count);
      count = count * ((std::size_t{1} << (d + 1)) - 2) + count;
    }
  }
  CHECK_THROWS_AS(truncate({4, 2}), CapacityError);
  CHECK_THROWS_AS(truncate({2, 2}, 100), CapacityError);
}

TEST_CASE("truncations are parent-closed and name elements by literal") {
  const Truncation t = truncate({2, 2});
  for (const auto& e : t.elements()) {
    if (e.has_parent())
      CHECK(t.contains(e.parent()));
    CHECK(parse_celement(t.poset().name(t.index_of(e))) == e);
  }
  CHECK_FALSE(t.contains(CElement::base(Word("000"))));
}

TEST_CASE("smaller truncations embed as order-preserving restrictions") {
  const Truncation big = truncate({2, 2});
  for (TruncationSpec small : {TruncationSpec{0, 1}, TruncationSpec{1, 1}, TruncationSpec{2, 1},
                               TruncationSpec{1, 2}, TruncationSpec{0, 2}}) {
    const Truncation t = truncate(small);
    std::vector<std::size_t> into;
    for (const auto& e : t.elements())
      into.push_back(big.index_of(e));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        REQUIRE(t.poset().leq(i, j) == big.poset().leq(into[i], into[j]));
  }
}

TEST_CASE("the antichain {x̂, ŷ}") {
  const auto [x, y] = non_splitting_antichain();
  CHECK(x.level() == 1);
  CHECK(y.level() == 1);
  CHECK(x.parent() == CElement::root());
  CHECK(y.parent() == CElement::root());
  CHECK(render_celement(x) == "(1,(0,e),0)");
  CHECK(render_celement(y) == "(1,(0,e),1)");
  const Truncation t = truncate({1, 1});
  CHECK(is_antichain(t.poset(), {t.index_of(x), t.index_of(y)}));
}

TEST_CASE("maximality of {x̂, ŷ} on truncations") {
  for (TruncationSpec spec : {TruncationSpec{2, 2}, TruncationSpec{3, 1}, TruncationSpec{0, 3}}) {
    const MaximalityReport r = verify_antichain_maximality(spec);
    CHECK(r.passed());
    CHECK(r.elements_checked == truncation_size(spec));
  }
  CHECK(to_text(verify_antichain_maximality({2, 2})) ==
        "maximality levels=2 depth=2 elements_checked=343 pass\n");
  const auto [x, y] = non_splitting_antichain();
  CHECK(c_leq(CElement::root(), x));
  CHECK(c_leq(y, CElement::base(Word("11"))));
}

TEST_CASE("non-splitting of {x̂, ŷ}") {
  const NonSplittingReport r = verify_antichain_non_splitting();
  CHECK(r.passed());
  REQUIRE(r.witness_checks.size() == 8);
  REQUIRE(r.partitions.size() == 4);
  const auto [x, y] = non_splitting_antichain();
  const CElement root = CElement::root();
  const CElement w1 = CElement::make(1, root, Word("01"));
  const CElement w2 = CElement::make(1, root, Word("11"));
  auto witness_for = [&](std::vector<CElement> down) {
    for (const auto& p : r.partitions)
      if (p.down == down)
        return p.witness;
    FAIL("partition missing");
    return root;
  };
  CHECK(witness_for({}) == root);
  CHECK(witness_for({x, y}) == w1);
  CHECK(witness_for({x}) == w1);
  CHECK(witness_for({y}) == w2);
  const std::string text = to_text(r);
  CHECK(text.find("partition D={(1,(0,e),0)} U={(1,(0,e),1)} refuted w=(1,(0,e),01)") !=
        std::string::npos);
  CHECK(text.find("partition D={} U={(1,(0,e),0),(1,(0,e),1)} refuted w=(0,e)") != std::string::npos);
  CHECK(text.find("partitions_refuted=4") != std::string::npos);
}

TEST_CASE("order_core agrees: {x̂, ŷ} is maximal in truncation (2,2) and does not split") {
  const Truncation t = truncate({2, 2});
  const auto [x, y] = non_splitting_antichain();
  const ElementSet a = normalized(t.poset(), {t.index_of(x), t.index_of(y)});
  CHECK(is_maximal_antichain(t.poset(), a));
  CHECK_FALSE(try_split(t.poset(), a));
}
