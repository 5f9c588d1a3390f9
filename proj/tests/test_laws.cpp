#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace mpbe;
using testing::open;

TEST_CASE("catalog shape") {
  const auto& laws = catalog();
  CHECK(laws.size() >= 40);
  std::set<std::string> ids;
  for (const auto& l : laws) {
    CHECK(ids.insert(l.id).second);
    CHECK_FALSE(l.anchor.empty());
    CHECK(l.check);
  }
  CHECK(std::is_sorted(laws.begin(), laws.end(), [](const Law& a, const Law& b) { return a.id < b.id; }));
  const Law* one = find_law("P3.forall_one");
  REQUIRE(one);
  CHECK(one->anchor == "∀x=1 iff x=1");
  CHECK(find_law("L6.arrow_iff_squig_one_class"));
  CHECK(find_law("C.forall_isotone")->conjecture);
  CHECK(find_law("P3.isotone_T")->hypothesis == std::vector<Flag>{Flag::condition_T});
  CHECK(find_law("nope") == nullptr);
}

TEST_CASE("filters") {
  LawFilter all;
  CHECK(all.selects(*find_law("P3.forall_one")));
  CHECK_FALSE(all.selects(*find_law("C.psBCK6")));
  LawFilter some{.ids = {"P6.*", "C.psBCK6"}};
  CHECK(some.selects(*find_law("P6.ds_upward")));
  CHECK(some.selects(*find_law("C.psBCK6")));
  CHECK_FALSE(some.selects(*find_law("P3.forall_one")));
}

TEST_CASE("suite on every fixture with its printed pairs") {
  std::size_t instances = 0;
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto f = open(name);
    auto vs = verify_suite(f.model, f.bare());
    SuiteSummary s = summarize(vs);
    CHECK(s.fails == 0);
    CHECK(s.holds > 0);
    instances += s.instances;
    for (const auto& v : vs) {
      if (v.verdict.status == Status::not_applicable) CHECK_FALSE(v.verdict.note.empty());
    }
  }
  CHECK(instances >= 10000);
}

TEST_CASE("suite output does not depend on thread count") {
  auto f = open("psbe5");
  LawFilter with_conj{.include_conjectures = true};
  auto one = verify_suite(f.model, f.bare(), with_conj, 1);
  auto four = verify_suite(f.model, f.bare(), with_conj, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].law == four[i].law);
    CHECK(one[i].pair == four[i].pair);
    CHECK(one[i].second == four[i].second);
    CHECK(one[i].verdict.status == four[i].verdict.status);
    CHECK(one[i].verdict.witness == four[i].verdict.witness);
    CHECK(one[i].verdict.instances == four[i].verdict.instances);
  }
}

TEST_CASE("every failure witness re-evaluates to a failure") {
  std::size_t failures = 0;
  for (const auto& name : testing::kFixtures) {
    auto f = open(name);
    auto pairs = enumerate_mop(f.model);
    SuiteCache cache(f.model);
    for (const auto& lv : verify_suite(f.model, pairs, {.include_conjectures = true})) {
      if (!lv.verdict.fails()) continue;
      ++failures;
      const Law& law = *find_law(lv.law);
      CAPTURE(lv.law);
      REQUIRE(law.domain == Domain::elements);
      LawContext ctx{.m = f.model,
                     .p = lv.pair ? &pairs[*lv.pair] : nullptr,
                     .q = lv.second ? &pairs[*lv.second] : nullptr,
                     .x = lv.verdict.witness,
                     .cache = &cache};
      CHECK_FALSE(law.check(ctx));
      CHECK(law.conjecture);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("the unconditional isotonicity claim fails on psbe4") {
  auto f = open("psbe4");
  SuiteCache cache(f.model);
  const Law& law = *find_law("C.exists_isotone");
  auto p3 = find_pair(f.doc, "p3").pair;
  Verdict v = evaluate_law(law, f.model, &p3, nullptr, cache);
  CHECK(v.fails());
  // a ≤ b, ∃a = 1, ∃b = c, 1 ≰ c
  CHECK(v.has_witness({f.el("a"), f.el("b")}));
}

TEST_CASE("hypotheses gate applicability") {
  auto f = open("psbe4");
  SuiteCache cache(f.model);
  auto id = MonadicPair::identity(4);
  Verdict v = evaluate_law(*find_law("P3.isotone_T"), f.model, &id, nullptr, cache);
  CHECK(v.status == Status::not_applicable);
  CHECK(v.note.find("condition_T") != std::string::npos);
  CHECK(inapplicable(*find_law("P2.neg_constants"), f.model).has_value());
}

TEST_CASE("trivial algebra") {
  FiniteAlgebra a("t", {"1"}, 0, std::nullopt, Table(1), Table(1));
  Model m = classify(a);
  auto id = MonadicPair::identity(1);
  auto vs = verify_suite(m, std::vector<MonadicPair>{id}, {.include_conjectures = true});
  CHECK(summarize(vs).fails == 0);
}

TEST_CASE("map-domain laws count one instance per candidate map") {
  auto f = open("bc4");
  SuiteCache cache(f.model);
  Verdict v = evaluate_law(*find_law("T4.tau_construction"), f.model, nullptr, nullptr, cache);
  CHECK(v.holds());
  CHECK(v.instances == 256);
}
