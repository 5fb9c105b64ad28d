#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace musicbox;
using testsupport::example_system;
using testsupport::mp;

TEST_CASE("splitmix64 matches the published reference stream", "[budgen][prng]") {
  SplitMix64 gen(0);
  CHECK(gen.next() == 0xE220A8397B1DCDAFULL);
  CHECK(gen.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(gen.next() == 0x06C45D188009454FULL);
  CHECK(gen.next() == 0xF88BB8A8724C81ECULL);
  CHECK(gen.next() == 0x1B39896A51A8749BULL);
}

TEST_CASE("uniform draws", "[budgen][prng]") {
  SECTION("n = 1 returns 0 and consumes exactly one raw draw") {
    SplitMix64 a(7);
    SplitMix64 b(7);
    CHECK(a.uniform(1) == 0);
    b.next();
    CHECK(a.state() == b.state());
  }
  SECTION("n = 0 is rejected") {
    SplitMix64 gen(7);
    CHECK_THROWS_AS(gen.uniform(0), ArgumentError);
  }
  SECTION("identical seeds give identical streams") {
    SplitMix64 a(1234);
    SplitMix64 b(1234);
    for (int i = 0; i < 1000; ++i) {
      REQUIRE(a.uniform(1 + (i % 17)) == b.uniform(1 + (i % 17)));
    }
  }
  SECTION("draws stay in range and hit every value") {
    SplitMix64 gen(5);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t v = gen.uniform(5);
      REQUIRE(v < 5);
      ++seen[v];
    }
    for (int count : seen) CHECK(count > 100);
  }
}

TEST_CASE("k = 0 generates the colored unit's pruning", "[budgen]") {
  const BudGeneratingSystem system = example_system();
  SplitMix64 gen(1);
  CHECK(generate_partial(system, 0, gen).pattern == unit_multi_pattern(system.monoid, 2));
  CHECK(generate_full(system, 0, gen).pattern == unit_multi_pattern(system.monoid, 2));
  CHECK(generate_homogeneous(system, 0, gen).pattern ==
        unit_multi_pattern(system.monoid, 2));
}

TEST_CASE("the partial derivation chain replays to the reference result", "[budgen]") {
  // Apply c2 at slot 1, then c1 at slot 2, then c4 at slot 3. Rule ordinals
  // are per-color: R_b1 = (c1, c2), R_b2 = (c3, c4), R_b3 = (c5).
  DerivationLog log;
  log.mode = GenerationMode::Partial;
  log.steps = {{1, {1}}, {2, {0}}, {3, {1}}};
  CHECK(replay(example_system(), log) ==
        mp("1 . 0 2 2 . 1 . 0 4 ; 0 . -4 . . 1 1 1 1 1"));
}

TEST_CASE("the full derivation chain replays to the reference result", "[budgen]") {
  // First iteration grafts c1 on the single slot; the second grafts
  // (c5, c3, c2, c1, c5) on the five slots b3 b2 b1 b1 b3.
  DerivationLog log;
  log.mode = GenerationMode::Full;
  log.steps = {{0, {0}}, {0, {0, 0, 1, 0, 0}}};
  CHECK(replay(example_system(), log) ==
        mp("0 1 . 2 . 1 . 0 2 . 1 . 0 4 4 ; -5 . . -1 0 . 1 -5 . . 0 0 0 0 0"));
}

TEST_CASE("the homogeneous derivation chain replays to the reference result", "[budgen]") {
  DerivationLog log;
  log.mode = GenerationMode::Homogeneous;
  log.steps = {{0, {0}}, {0, {1}}, {0, {2}}};
  CHECK(replay(example_system(), log) ==
        mp("0 1 . 2 . 1 . 1 . 0 4 ; -5 . . -1 0 . 1 0 . 1 0"));
}

TEST_CASE("generation is deterministic and replayable", "[budgen][property]") {
  const BudGeneratingSystem system = example_system();
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xDEADBEEFULL}) {
    SECTION("partial, seed " + std::to_string(seed)) {
      SplitMix64 a(seed);
      SplitMix64 b(seed);
      const GenerationResult first = generate_partial(system, 12, a);
      const GenerationResult second = generate_partial(system, 12, b);
      CHECK(first.pattern == second.pattern);
      CHECK(first.log == second.log);
      CHECK(replay(system, first.log) == first.pattern);
    }
    SECTION("full, seed " + std::to_string(seed)) {
      SplitMix64 a(seed);
      const GenerationResult result = generate_full(system, 3, a);
      CHECK(replay(system, result.log) == result.pattern);
      CHECK(result.pattern.multiplicity() == system.multiplicity);
    }
    SECTION("homogeneous, seed " + std::to_string(seed)) {
      SplitMix64 a(seed);
      const GenerationResult result = generate_homogeneous(system, 4, a);
      CHECK(replay(system, result.log) == result.pattern);
    }
  }
}

TEST_CASE("partial steps grow the arity by |rule| - 1", "[budgen][property]") {
  const BudGeneratingSystem system = example_system();
  SplitMix64 gen(2024);
  const GenerationResult result = generate_partial(system, 20, gen);

  // Re-derive the chain step by step and account each applied rule's arity.
  ColoredMultiPattern x = colored_unit(system.monoid, system.multiplicity, system.initial);
  for (const DerivationStep& step : result.log.steps) {
    if (step.skipped()) {
      REQUIRE(system.rules_for(x.input(step.slot)).empty());
      continue;
    }
    const auto candidates = system.rules_for(x.input(step.slot));
    const ColoredMultiPattern& rule = system.rules[candidates.at(step.choices[0])];
    const std::size_t before = x.arity();
    x = compose(system.monoid, x, step.slot, rule);
    REQUIRE(x.arity() == before + rule.arity() - 1);
  }
  CHECK(pruning(x) == result.pattern);
}

TEST_CASE("a system whose colors each have at most one rule is deterministic in full mode",
          "[budgen]") {
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 1;
  system.colors = {Color("a"), Color("b")};
  system.initial = Color("a");
  system.rules.emplace_back(Color("a"), mp("0 . 1"),
                            std::vector<Color>{Color("b"), Color("a")});
  system.rules.emplace_back(Color("b"), mp("2"), std::vector<Color>{Color("b")});

  SplitMix64 a(1);
  SplitMix64 b(999999);
  CHECK(generate_full(system, 4, a).pattern == generate_full(system, 4, b).pattern);
}

TEST_CASE("a single-rule system is deterministic in homogeneous mode", "[budgen]") {
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 1;
  system.colors = {Color("a")};
  system.initial = Color("a");
  system.rules.emplace_back(Color("a"), mp("0 . 1"),
                            std::vector<Color>{Color("a"), Color("a")});

  SplitMix64 a(3);
  SplitMix64 b(77777);
  CHECK(generate_homogeneous(system, 3, a).pattern ==
        generate_homogeneous(system, 3, b).pattern);
  CHECK_THROWS_AS(
      [] {
        BudGeneratingSystem empty;
        empty.colors = {Color("a")};
        empty.initial = Color("a");
        SplitMix64 g(0);
        return generate_homogeneous(empty, 1, g);
      }(),
      EmptyRuleSetError);
}

TEST_CASE("replay rejects invalid logs with the step index", "[budgen]") {
  const BudGeneratingSystem system = example_system();

  DerivationLog bad_slot{GenerationMode::Partial, {{5, {0}}}};
  try {
    replay(system, bad_slot);
    FAIL("expected ReplayError");
  } catch (const ReplayError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }

  DerivationLog bad_rule{GenerationMode::Partial, {{1, {7}}}};
  CHECK_THROWS_AS(replay(system, bad_rule), ReplayError);

  DerivationLog bad_skip{GenerationMode::Partial, {{1, {}}}};
  CHECK_THROWS_AS(replay(system, bad_skip), ReplayError);

  DerivationLog bad_width{GenerationMode::Full, {{0, {0, 0}}}};
  CHECK_THROWS_AS(replay(system, bad_width), ReplayError);
}

TEST_CASE("generation refuses structurally broken systems", "[budgen]") {
  BudGeneratingSystem system = example_system();
  system.initial = Color("zz");
  SplitMix64 gen(1);
  CHECK_THROWS_AS(generate_partial(system, 3, gen), InvalidSystemError);
  CHECK_THROWS_AS(generate_full(system, 3, gen), InvalidSystemError);
  CHECK_THROWS_AS(generate_homogeneous(system, 3, gen), InvalidSystemError);
  CHECK_THROWS_AS(replay(system, DerivationLog{}), InvalidSystemError);
}

TEST_CASE("validate_system reports structural problems", "[budgen]") {
  SECTION("the example system is clean") {
    CHECK(validate_system(example_system()).empty());
  }

  SECTION("unknown colors") {
    BudGeneratingSystem system = example_system();
    system.rules.emplace_back(Color("zz"), mp("0 ; 0"), std::vector<Color>{Color("b1")});
    const auto diagnostics = validate_system(system);
    CHECK(has_errors(diagnostics));
  }

  SECTION("wrong multiplicity") {
    BudGeneratingSystem system = example_system();
    system.rules.emplace_back(Color("b1"), mp("0"), std::vector<Color>{Color("b1")});
    CHECK(has_errors(validate_system(system)));
  }

  SECTION("initial color must be declared") {
    BudGeneratingSystem system = example_system();
    system.initial = Color("zz");
    CHECK(has_errors(validate_system(system)));
  }

  SECTION("terminal colors are notes, not errors") {
    BudGeneratingSystem system;
    system.monoid = DegreeMonoid::additive();
    system.multiplicity = 1;
    system.colors = {Color("a"), Color("b")};
    system.initial = Color("a");
    system.rules.emplace_back(Color("a"), mp("0"), std::vector<Color>{Color("b")});
    const auto diagnostics = validate_system(system);
    CHECK_FALSE(has_errors(diagnostics));
    CHECK_FALSE(diagnostics.empty());
  }
}
