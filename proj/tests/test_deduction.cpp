#include "doctest.h"
#include "mpbe/errors.hpp"
#include "support.hpp"

using namespace mpbe;
using testing::open;

namespace {

std::vector<ElementSet> members(const std::vector<DeductiveSystem>& ds) {
  std::vector<ElementSet> v;
  for (const auto& d : ds) v.push_back(d.members);
  return v;
}

std::vector<ElementSet> brute_ds(const FiniteAlgebra& a) {
  std::vector<ElementSet> v;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m)
    if (testing::naive_ds(a, ElementSet(m))) v.push_back(ElementSet(m));
  return v;
}

}  // namespace

TEST_CASE("deductive systems match the subset filter on every fixture") {
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto f = open(name);
    auto ds = enumerate_ds(f.model);
    CHECK(testing::bits_of(members(ds)) == testing::bits_of(brute_ds(f.a())));
    for (const auto& d : ds) {
      CHECK(d.normal == testing::naive_normal(f.a(), d.members));
      CHECK(is_deductive_system(f.a(), d.members, Implication::squig));
    }
    for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1].members.size() <= ds[i].members.size());
  }
}

TEST_CASE("printed DS listings") {
  auto f = open("psbe5");
  auto ds = members(enumerate_ds(f.model));
  CHECK(ds == std::vector<ElementSet>{f.set({"1"}), f.set({"1", "a", "d"}), f.set({"1", "b", "c"}), f.a().carrier()});
  for (const auto& p : f.pairs) CHECK(members(monadic_ds(f.model, p.pair)) == ds);

  auto b = open("bc4");
  auto bds = members(enumerate_ds(b.model));
  CHECK(bds == std::vector<ElementSet>{b.set({"1"}), b.set({"1", "a"}), b.set({"1", "b"}), b.a().carrier()});
  CHECK(members(monadic_ds(b.model, b.pairs[1].pair)) == std::vector<ElementSet>{b.set({"1"}), b.a().carrier()});
}

TEST_CASE("generated DS equals the intersection of all DS containing the set") {
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto doc = testing::load(name);
    const auto& a = doc.algebra;
    auto all = brute_ds(a);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
      ElementSet x(m);
      ElementSet meet = a.carrier();
      for (auto d : all)
        if (x.subset_of(d)) meet = meet & d;
      CHECK(generated_ds(a, x) == meet);
    }
  }
}

TEST_CASE("generated DS by implication chains on BCK fixtures") {
  for (const char* name : {"bc4", "inv6"}) {
    auto doc = testing::load(name);
    const auto& a = doc.algebra;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
      ElementSet x(m);
      CHECK(generated_ds_by_chains(a, x, Implication::arrow) == generated_ds(a, x));
      CHECK(generated_ds_by_chains(a, x, Implication::squig) == generated_ds(a, x));
    }
  }
}

TEST_CASE("generated DS of {1,d}") {
  auto f = open("psbe5");
  CHECK(generated_ds(f.a(), f.set({"1", "d"})) == f.set({"1", "a", "d"}));
  CHECK(generated_ds(f.a(), ElementSet{}) == f.set({"1"}));
}

TEST_CASE("congruences match the partition filter") {
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto f = open(name);
    std::set<std::vector<Elem>> expect;
    for (const auto& p : testing::all_partitions(f.model.size()))
      if (testing::naive_compatible(f.a(), p)) expect.insert(p);
    std::set<std::vector<Elem>> got;
    for (const auto& c : enumerate_congruences(f.model)) {
      got.insert(c.partition.labels());
      CHECK(is_congruence(f.a(), c.partition));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("theta of a normal DS has that DS as its unit class") {
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto f = open(name);
    for (const auto& d : enumerate_ds(f.model)) {
      if (!d.normal) continue;
      try {
        Congruence t = theta_from_ds(f.a(), d.members);
        CHECK(t.class_set(f.a().one()) == d.members);
        for (Elem x : testing::elems(f.model.size()))
          for (Elem y : testing::elems(f.model.size()))
            CHECK(t.related(x, y) == (d.members.contains(f.a().arrow(x, y)) && d.members.contains(f.a().arrow(y, x))));
      } catch (const NotACongruence&) {
        CHECK_FALSE(f.model.holds(Flag::pseudo_bck));
      }
    }
  }
}

TEST_CASE("correspondences") {
  auto b = open("bc4");
  for (const auto& p : b.pairs) {
    auto c = correspondence_report(b.model, p.pair, Variant::be);
    CHECK(c.verdict.holds());
    CHECK(c.systems.size() == c.congruences.size());
    CHECK(testing::bits_of(c.systems) == testing::bits_of(members(monadic_ds(b.model, p.pair))));
  }
  auto i = open("inv6");
  auto c = correspondence_report(i.model, find_pair(i.doc, "remark").pair, Variant::bck_meet);
  CHECK(c.verdict.holds());
  CHECK(c.systems.size() == c.congruences.size());
  CHECK_FALSE(c.systems.empty());
  CHECK_THROWS_AS(correspondence_report(open("psbe4").model, MonadicPair::identity(4), Variant::bck_meet),
                  PreconditionUnmet);
}

TEST_CASE("quotient by {1,a,d} with the fourth pair") {
  auto f = open("psbe5");
  Congruence t = theta_from_ds(f.a(), f.set({"1", "a", "d"}));
  auto q = quotient(f.a(), t, &f.pairs[3].pair);
  CHECK(q.algebra.size() == 2);
  CHECK(q.arrow_equals_squig);
  REQUIRE(q.pair_report);
  CHECK(q.pair_report->holds());
  CHECK(testing::naive_pseudo_be(q.algebra));
  // classes {1,a,d} and {b,c}
  CHECK(q.projection[f.el("a")] == q.projection[f.el("1")]);
  CHECK(q.projection[f.el("b")] == q.projection[f.el("c")]);
  CHECK(q.projection[f.el("b")] != q.projection[f.el("1")]);
}

TEST_CASE("theta rejects a non-DS") {
  auto f = open("psbe5");
  CHECK_THROWS(theta_from_ds(f.a(), f.set({"1", "a"})));
}

TEST_CASE("congruence normalisation") {
  Congruence c(std::vector<Elem>{3, 3, 1, 3});
  CHECK(c.labels() == std::vector<Elem>{0, 0, 1, 0});
  CHECK(c.class_count() == 2);
  CHECK(Congruence::total(3).class_count() == 1);
  CHECK(Congruence::identity(3).class_count() == 3);
}
