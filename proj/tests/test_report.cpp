#include "doctest.h"
#include "mpbe/report.hpp"
#include "support.hpp"

using namespace mpbe;
using report::Json;

TEST_CASE("digest is FNV-1a 64") {
  CHECK(report::digest("") == "cbf29ce484222325");
  CHECK(report::digest("a") == "af63dc4c8601ec8c");
  CHECK(report::digest("foobar") == "85944171f73967e8");
}

TEST_CASE("verdict serialisation") {
  auto f = testing::open("psbe5");
  auto bck = check_pseudo_bck(f.a());
  Json j = report::verdict(f.a(), *bck.find("psBCK6"));
  CHECK(j["status"] == "fails");
  CHECK(j["witness"] == Json::array({"a", "d"}));
  // a≤d≤a and b≤c≤b give four ordered violations
  CHECK(j["violations"] == 4);
  CHECK(j["witnesses"].size() == 4);
  auto be = check_pseudo_be(f.a());
  Json ok = report::verdict(f.a(), *be.find("psBE1"));
  CHECK_FALSE(ok.contains("witness"));
}

TEST_CASE("reports are deterministic") {
  auto f = testing::open("bc4");
  auto a = report::suite(f.model, verify_suite(f.model, f.bare(), {}, 1), f.pairs).dump();
  auto b = report::suite(f.model, verify_suite(f.model, f.bare(), {}, 3), f.pairs).dump();
  CHECK(a == b);
  CHECK(report::classification(f.model).dump() == report::classification(testing::open("bc4").model).dump());
}

TEST_CASE("mop payload lists fixed sets") {
  auto f = testing::open("psbe5");
  MopStats st;
  auto mop = enumerate_mop(f.model, {}, &st);
  Json j = report::mop(f.model, mop, Mode::plain, st);
  CHECK(j["count"] == 4);
  CHECK(j["pairs"][3]["fixed"] == Json::array({"1", "c", "d"}));
}

TEST_CASE("quotient payload carries a parseable document") {
  auto f = testing::open("psbe5");
  ElementSet d = f.set({"1", "a", "d"});
  auto q = quotient(f.a(), theta_from_ds(f.a(), d), &f.pairs[3].pair);
  Json j = report::quotient(f.a(), d, q);
  auto doc = parse_algebra(j["document"].get<std::string>());
  CHECK(doc.algebra.size() == 2);
  CHECK(find_pair(doc, "q").pair == *q.pair);
}
