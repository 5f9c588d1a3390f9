#include "doctest.h"
#include "mpbe/errors.hpp"
#include "support.hpp"

using namespace mpbe;

namespace {

const char* kSmall = R"(algebra small
elements 1 a
one 1
arrow
1 a
1 1
squig
1 a
1 1
unary id
1 a
end
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s = ElementSet::singleton(3) | ElementSet::singleton(0);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.members() == std::vector<Elem>{0, 3});
  CHECK(s.subset_of(ElementSet::full(4)));
  CHECK_FALSE(ElementSet::full(4).subset_of(s));
  s.erase(3);
  CHECK(s == ElementSet::singleton(0));
  CHECK(ElementSet::full(64).size() == 64);
}

TEST_CASE("unary map composition") {
  UnaryMap f(std::vector<Elem>{1, 2, 0});
  UnaryMap g(std::vector<Elem>{0, 0, 2});
  CHECK(f.after(g).images() == std::vector<Elem>{1, 1, 0});
  CHECK(g.after(f).images() == std::vector<Elem>{0, 2, 0});
  CHECK(UnaryMap::identity(3).is_identity());
  CHECK(g.image() == (ElementSet::singleton(0) | ElementSet::singleton(2)));
}

TEST_CASE("parse a minimal document") {
  auto doc = parse_algebra(kSmall);
  CHECK(doc.algebra.name() == "small");
  CHECK(doc.algebra.size() == 2);
  CHECK(doc.algebra.one() == 0);
  CHECK_FALSE(doc.algebra.zero().has_value());
  REQUIRE(doc.maps.size() == 1);
  CHECK(doc.find_map("id")->is_identity());
  CHECK(doc.find_map("nope") == nullptr);
}

TEST_CASE("fixtures round-trip through the file format") {
  for (const auto& name : testing::kFixtures) {
    CAPTURE(name);
    auto doc = testing::load(name);
    auto again = parse_algebra(serialize(doc));
    CHECK(again == doc);
    CHECK(serialize(again) == serialize(doc));
  }
}

TEST_CASE("parse errors carry the line number") {
  std::string bad_entry = kSmall;
  bad_entry.replace(bad_entry.find("1 1\nsquig"), 3, "1 q");
  CHECK(error_line(bad_entry) == 6);

  std::string short_row = kSmall;
  short_row.replace(short_row.find("1 1\nsquig"), 3, "1");
  CHECK(error_line(short_row) == 6);

  CHECK(error_line("algebra x\nelements 1 1\n") == 2);
  CHECK(error_line("algebra x\nelements 1 a\none z\n") == 3);
  CHECK(error_line("bogus\n") == 1);
  CHECK(error_line(std::string(kSmall) + "trailing\n") > 0);
}

TEST_CASE("missing tables are rejected") {
  CHECK_THROWS_AS(parse_algebra("algebra x\nelements 1\none 1\nend\n"), ParseError);
}

TEST_CASE("constructor validates shapes") {
  CHECK_THROWS_AS(FiniteAlgebra("x", {"1", "a"}, 0, std::nullopt, Table(2), Table(3)), InvalidAlgebra);
  CHECK_THROWS_AS(FiniteAlgebra("x", {"1", "1"}, 0, std::nullopt, Table(2), Table(2)), InvalidAlgebra);
  CHECK_THROWS_AS(FiniteAlgebra("x", {"1", "a"}, 0, std::nullopt, Table(2, 7), Table(2)), InvalidAlgebra);
}
