#include <set>

#include "doctest.h"
#include "mpbe/errors.hpp"
#include "support.hpp"

using namespace mpbe;

namespace {

/// Orbit count of pseudo BE table pairs on {1,a,b} under the swap of a and b.
std::size_t three_element_classes() {
  std::set<std::vector<Elem>> seen;
  std::size_t orbits = 0;
  for (unsigned code = 0; code < 81; ++code) {
    unsigned c = code;
    std::vector<Elem> cells(4);
    for (auto& v : cells) v = c % 3, c /= 3;
    Table ar(3), sq(3);
    for (Elem x = 0; x < 3; ++x)
      for (Elem y = 0; y < 3; ++y) {
        Elem v = x == y || y == 0 ? 0 : x == 0 ? y : 0;
        ar.at(x, y) = sq.at(x, y) = v;
      }
    ar.at(1, 2) = cells[0], ar.at(2, 1) = cells[1], sq.at(1, 2) = cells[2], sq.at(2, 1) = cells[3];
    if (!testing::naive_pseudo_be(FiniteAlgebra("t", {"1", "a", "b"}, 0, std::nullopt, ar, sq))) continue;
    if (seen.count(cells)) continue;
    ++orbits;
    seen.insert(cells);
    auto sw = [](Elem v) -> Elem { return v == 0 ? 0 : 3 - v; };
    seen.insert({sw(cells[1]), sw(cells[0]), sw(cells[3]), sw(cells[2])});
  }
  return orbits;
}

}  // namespace

TEST_CASE("closed-form candidate counts") {
  CHECK(forced_candidate_count(1) == 1);
  CHECK(forced_candidate_count(2) == 1);
  CHECK(forced_candidate_count(3) == 81);
  CHECK(forced_candidate_count(4) == 16777216);
}

TEST_CASE("exhaustive size-3 enumeration visits every forced candidate") {
  SearchSpec spec{.min_size = 3, .max_size = 3, .iso_rejection = false, .prune = false};
  auto r = search_counterexample(spec);
  CHECK(r.status == SearchStatus::exhausted);
  REQUIRE(r.stats.sizes.size() == 1);
  CHECK(r.stats.sizes[0].candidates == 81);
  CHECK(r.stats.sizes[0].pseudo_be == 6);
  CHECK(r.stats.sizes[0].canonical == 6);
}

TEST_CASE("isomorphism rejection keeps one table pair per class") {
  SearchSpec spec{.min_size = 3, .max_size = 3};
  auto r = search_counterexample(spec);
  CHECK(r.stats.sizes[0].canonical == three_element_classes());
  CHECK(r.stats.sizes[0].canonical == 4);
}

TEST_CASE("pruning does not change the pseudo BE count at size 4") {
  auto pruned = search_counterexample({.min_size = 4, .max_size = 4, .iso_rejection = false});
  auto full = search_counterexample({.min_size = 4, .max_size = 4, .iso_rejection = false, .prune = false});
  CHECK(full.stats.sizes[0].candidates == forced_candidate_count(4));
  CHECK(pruned.stats.sizes[0].pseudo_be == full.stats.sizes[0].pseudo_be);
  CHECK(pruned.stats.sizes[0].candidates <= full.stats.sizes[0].candidates);
}

TEST_CASE("canonical representatives decide the same laws") {
  for (const char* law : {"C.psBCK6", "C.leq_transitive", "C.forall_isotone", "P2.exchange", "C.residuated"}) {
    CAPTURE(law);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto with = search_counterexample({.min_size = n, .max_size = n, .law = law});
      auto without = search_counterexample({.min_size = n, .max_size = n, .law = law, .iso_rejection = false});
      CHECK(with.status == without.status);
    }
  }
}

TEST_CASE("pseudo BCK is not implied at size 3") {
  auto r = search_counterexample({.max_size = 4, .law = "C.psBCK6"});
  CHECK(r.status == SearchStatus::found);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->reverified);
  CHECK(r.counterexample->algebra.size() == 3);
  CHECK(testing::naive_pseudo_be(r.counterexample->algebra));
  CHECK_FALSE(check_pseudo_bck(r.counterexample->algebra).holds());
}

TEST_CASE("reflexivity has no counterexample") {
  auto r = search_counterexample({.max_size = 4, .law = "C.leq_reflexive"});
  CHECK(r.status == SearchStatus::exhausted);
  CHECK_FALSE(r.counterexample);
}

TEST_CASE("isotonicity without (T)") {
  auto r = search_counterexample({.max_size = 4, .forbid = {Flag::condition_T}, .law = "C.forall_isotone"});
  CHECK(r.status == SearchStatus::found);
  REQUIRE(r.counterexample);
  const auto& cx = *r.counterexample;
  CHECK(cx.reverified);
  REQUIRE(cx.pair);
  CHECK(testing::naive_monadic(cx.algebra, cx.pair->exists, cx.pair->forall));
  // the emitted document parses back to the same algebra and pair
  auto doc = parse_algebra(cx.document());
  CHECK(doc.algebra == cx.algebra);
  CHECK(find_pair(doc, "cx").pair == *cx.pair);
  Model m = classify(doc.algebra);
  CHECK_FALSE(m.holds(Flag::condition_T));
  const auto& w = cx.verdict.witness;
  REQUIRE(w.size() == 2);
  CHECK(m.leq(w[0], w[1]));
  CHECK_FALSE(m.leq(cx.pair->forall(w[0]), cx.pair->forall(w[1])));
}

TEST_CASE("search results do not depend on thread count") {
  auto one = search_counterexample({.max_size = 4, .forbid = {Flag::condition_T}, .law = "C.exists_isotone"});
  auto four =
      search_counterexample({.max_size = 4, .forbid = {Flag::condition_T}, .law = "C.exists_isotone", .threads = 4});
  REQUIRE(one.counterexample);
  REQUIRE(four.counterexample);
  CHECK(one.counterexample->document() == four.counterexample->document());
  CHECK(one.counterexample->verdict.witness == four.counterexample->verdict.witness);
}

TEST_CASE("budget and preconditions") {
  auto r = search_counterexample({.max_size = 4, .law = "C.residuated", .budget = 10});
  CHECK(r.status == SearchStatus::budget_exceeded);
  CHECK_THROWS_AS(search_counterexample({.max_size = 6}), PreconditionUnmet);
  CHECK_THROWS_AS(search_counterexample({.max_size = 5, .prune = false}), PreconditionUnmet);
  CHECK_THROWS_AS(search_counterexample({.law = "X.unknown"}), PreconditionUnmet);
}

TEST_CASE("canonical form check") {
  auto doc = testing::load("psbe4");
  // psbe4 and its relabelling by the swap of a and b cannot both be canonical
  const auto& a = doc.algebra;
  std::vector<Elem> perm = {0, 2, 1, 3};
  Table ar(4), sq(4);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      ar.at(perm[x], perm[y]) = perm[a.arrow(x, y)];
      sq.at(perm[x], perm[y]) = perm[a.squig(x, y)];
    }
  FiniteAlgebra b(a.name(), a.element_names(), 0, std::nullopt, ar, sq);
  CHECK(testing::naive_pseudo_be(b));
  CHECK_FALSE((is_canonical(a) && is_canonical(b)));
}
