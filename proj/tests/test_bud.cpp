#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace musicbox;
using testsupport::mp;

namespace {

const DegreeMonoid add = DegreeMonoid::additive();

ColoredMultiPattern colored(const std::string& out, const std::string& body,
                            std::vector<std::string> inputs) {
  std::vector<Color> colors;
  colors.reserve(inputs.size());
  for (const std::string& name : inputs) colors.emplace_back(name);
  return ColoredMultiPattern(Color(out), mp(body), std::move(colors));
}

// Uniformly random colored multi-pattern over a small palette.
ColoredMultiPattern random_colored(SplitMix64& gen, std::size_t multiplicity) {
  static const std::vector<std::string> palette{"b1", "b2", "b3"};
  const MultiPattern body = testsupport::random_multi_pattern(add, gen, multiplicity, 4, 6);
  std::vector<Color> inputs;
  for (std::size_t i = 0; i < body.arity(); ++i) {
    inputs.emplace_back(palette[gen.uniform(palette.size())]);
  }
  return ColoredMultiPattern(Color(palette[gen.uniform(palette.size())]), body,
                             std::move(inputs));
}

}  // namespace

TEST_CASE("color names are identifiers", "[bud]") {
  CHECK_THROWS_AS(Color(""), FormatError);
  CHECK_THROWS_AS(Color("1b"), FormatError);
  CHECK_THROWS_AS(Color("b 1"), FormatError);
  CHECK(Color("b1") < Color("b2"));
}

TEST_CASE("colored composition substitutes the color word", "[bud]") {
  const auto x = colored("b3", "0 1 . ; -1 . 0", {"b2", "b1"});
  const auto y = colored("b1", "1 1 2 ; 2 -1 -2", {"b3", "b3", "b2"});
  const auto expected =
      colored("b3", "0 2 2 3 . ; -1 . 2 -1 -2", {"b2", "b3", "b3", "b2"});
  CHECK(compose(add, x, 2, y) == expected);
  CHECK(pruning(expected) == mp("0 2 2 3 . ; -1 . 2 -1 -2"));

  SECTION("color mismatch") {
    CHECK_THROWS_AS(compose(add, x, 1, y), ColorMismatchError);
  }
  SECTION("multiplicity and position checks") {
    const auto one_voice = colored("b1", "0", {"b1"});
    CHECK_THROWS_AS(compose(add, x, 2, one_voice), MultiplicityError);
    CHECK_THROWS_AS(compose(add, x, 3, y), PositionError);
  }
  SECTION("colored units are neutral") {
    CHECK(compose(add, x, 1, colored_unit(add, 2, Color("b2"))) == x);
    CHECK(compose(add, x, 2, colored_unit(add, 2, Color("b1"))) == x);
    CHECK(compose(add, colored_unit(add, 2, Color("b3")), 1, x) == x);
  }
}

TEST_CASE("colored unit", "[bud]") {
  const auto unit = colored_unit(add, 2, Color("b1"));
  CHECK(unit.output() == Color("b1"));
  CHECK(unit.inputs() == std::vector<Color>{Color("b1")});
  CHECK(pruning(unit) == unit_multi_pattern(add, 2));
}

TEST_CASE("colored full composition validates every slot first", "[bud]") {
  const auto x = colored("b1", "0 1 ; 2 0", {"b1", "b2"});
  const auto y1 = colored("b1", "0 ; 1", {"b3"});
  const auto y2 = colored("b2", "2 ; 0", {"b1"});

  const std::vector<ColoredMultiPattern> good{y1, y2};
  CHECK(full_compose(add, x, good) ==
        colored("b1", "0 3 ; 3 0", {"b3", "b1"}));

  const std::vector<ColoredMultiPattern> bad{y1, y1};
  try {
    full_compose(add, x, bad);
    FAIL("expected ColorMismatchError");
  } catch (const ColorMismatchError& e) {
    CHECK(std::string(e.what()).find("slot 2") != std::string::npos);
  }

  const std::vector<ColoredMultiPattern> units{colored_unit(add, 2, Color("b1")),
                                               colored_unit(add, 2, Color("b2"))};
  CHECK(full_compose(add, x, units) == x);
}

TEST_CASE("colored homogeneous composition grafts on matching inputs only", "[bud]") {
  const auto x = colored("b1", "0 1 2 ; 1 0 2", {"b2", "b1", "b2"});
  const auto y = colored("b2", "5 ; -5", {"b3"});

  // Slots 1 and 3 match; slot 2 receives its colored unit.
  const std::vector<ColoredMultiPattern> explicit_tuple{
      y, colored_unit(add, 2, Color("b1")), y};
  CHECK(homogeneous_compose(add, x, y) == full_compose(add, x, explicit_tuple));
  CHECK(homogeneous_compose(add, x, y) ==
        colored("b1", "5 1 7 ; -4 0 -3", {"b3", "b1", "b3"}));

  SECTION("no matching input leaves the element unchanged") {
    const auto z = colored("b3", "9 ; 9", {"b1"});
    CHECK(homogeneous_compose(add, x, z) == x);
  }

  SECTION("all inputs matching equals the full composition with copies") {
    const auto w = colored("b1", "0 1 ; 1 0", {"b2", "b2"});
    const std::vector<ColoredMultiPattern> copies{y, y};
    CHECK(homogeneous_compose(add, w, y) == full_compose(add, w, copies));
  }
}

TEST_CASE("pruning commutes with composition", "[bud][property]") {
  SplitMix64 gen(83);
  int done = 0;
  while (done < 300) {
    const std::size_t mult = 1 + gen.uniform(2);
    const auto x = random_colored(gen, mult);
    const auto y = random_colored(gen, mult);
    const std::size_t i = 1 + gen.uniform(x.arity());
    if (x.input(i) != y.output()) continue;
    REQUIRE(pruning(compose(add, x, i, y)) == compose(add, pruning(x), i, pruning(y)));
    ++done;
  }
}

TEST_CASE("colored operad axioms where both sides are defined", "[bud][property]") {
  SplitMix64 gen(89);
  int sequential = 0;
  int parallel = 0;
  while (sequential < 200 || parallel < 200) {
    const std::size_t mult = 1 + gen.uniform(2);
    const auto x = random_colored(gen, mult);
    const auto y = random_colored(gen, mult);
    const auto z = random_colored(gen, mult);

    if (sequential < 200) {
      const std::size_t i = 1 + gen.uniform(x.arity());
      const std::size_t j = 1 + gen.uniform(y.arity());
      if (x.input(i) == y.output() && y.input(j) == z.output()) {
        REQUIRE(compose(add, compose(add, x, i, y), i + j - 1, z) ==
                compose(add, x, i, compose(add, y, j, z)));
        ++sequential;
      }
    }
    if (parallel < 200 && x.arity() >= 2) {
      const std::size_t i = 1 + gen.uniform(x.arity() - 1);
      const std::size_t j = i + 1 + gen.uniform(x.arity() - i);
      if (x.input(i) == y.output() && x.input(j) == z.output()) {
        REQUIRE(compose(add, compose(add, x, i, y), j + y.arity() - 1, z) ==
                compose(add, compose(add, x, j, z), i, y));
        ++parallel;
      }
    }
  }
}

TEST_CASE("single-color homogeneous composition prunes to the plain one", "[bud]") {
  SplitMix64 gen(97);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPattern bx = testsupport::random_multi_pattern(add, gen, 2, 4, 6);
    const MultiPattern by = testsupport::random_multi_pattern(add, gen, 2, 4, 6);
    const Color b("b1");
    const ColoredMultiPattern x(b, bx, std::vector<Color>(bx.arity(), b));
    const ColoredMultiPattern y(b, by, std::vector<Color>(by.arity(), b));
    REQUIRE(pruning(homogeneous_compose(add, x, y)) == homogeneous_compose(add, bx, by));
  }
}
