#include <doctest.h>

#include <cstdlib>

#include "liegram/chevalley.hpp"

using namespace liegram;

TEST_SUITE_BEGIN("chevalley");

TEST_CASE("paper magnitudes: C2, G2, A2") {
  root_system c2(parse_cartan_type("C2"));
  structure_constants sc(c2);
  // [e_a, e_{a+b}] = +-2 e_{2a+b}
  auto br = sc.bracket(c2.parse_root("10"), c2.parse_root("11"));
  REQUIRE(br.has_value());
  CHECK(br->first == c2.parse_root("21"));
  CHECK(std::abs(br->second) == 2);
  // [e_a, e_b] = +-1 e_{a+b}
  auto ab = sc.bracket(c2.parse_root("10"), c2.parse_root("01"));
  REQUIRE(ab.has_value());
  CHECK(std::abs(ab->second) == 1);

  root_system g2(parse_cartan_type("G2"));
  structure_constants sg(g2);
  // [e_{a+b}, e_{2a+b}] = +-3 e_{3a+2b}
  auto b3 = sg.bracket(g2.parse_root("11"), g2.parse_root("21"));
  REQUIRE(b3.has_value());
  CHECK(b3->first == g2.parse_root("32"));
  CHECK(std::abs(b3->second) == 3);
  // [e_b, e_{3a+b}] = +-e_{3a+2b}
  auto b1 = sg.bracket(g2.parse_root("01"), g2.parse_root("31"));
  REQUIRE(b1.has_value());
  CHECK(std::abs(b1->second) == 1);

  root_system a2(parse_cartan_type("A2"));
  structure_constants sa(a2);
  auto s = sa.bracket(0, 1);
  REQUIRE(s.has_value());
  CHECK(std::abs(s->second) == 1);
}

TEST_CASE("bracket absent for non-root sums") {
  root_system c2(parse_cartan_type("C2"));
  structure_constants sc(c2);
  CHECK(!sc.bracket(c2.parse_root("10"), c2.parse_root("10")).has_value());
  CHECK(!sc.bracket(c2.parse_root("01"), c2.parse_root("21")).has_value());
}

TEST_CASE("antisymmetry and string bounds, all pairs") {
  for (const auto& t : {"F4", "G2", "E8", "C2", "D4", "B3", "A5"}) {
    CAPTURE(t);
    root_system rs(parse_cartan_type(t));
    structure_constants sc(rs);
    std::string msg;
    CHECK_MESSAGE(sc.check_antisymmetry_and_strings(&msg), msg);
  }
}

TEST_CASE("Jacobi exhaustive on F4 and G2") {
  for (const auto& t : {"F4", "G2", "C2", "D4"}) {
    CAPTURE(t);
    root_system rs(parse_cartan_type(t));
    structure_constants sc(rs);
    std::string msg;
    CHECK_MESSAGE(sc.check_jacobi(0, 0, &msg), msg);
  }
}

TEST_CASE("Jacobi randomized on E8") {
  root_system rs(parse_cartan_type("E8"));
  structure_constants sc(rs);
  std::string msg;
  CHECK_MESSAGE(sc.check_jacobi(20000, 0x5eedull, &msg), msg);
}

TEST_SUITE_END();
