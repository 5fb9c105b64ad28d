#pragma once

// Shared fixtures for the test suites: terse constructors mirroring the
// concise pattern notation, the running example generating system, and
// seeded random generators for property tests.

#include <cstdint>
#include <string>
#include <vector>

#include "musicbox/musicbox.hpp"

namespace testsupport {

using namespace musicbox;

inline Pattern pat(const std::string& text) { return parse_pattern(text); }

inline MultiPattern mp(const std::string& text) { return parse_multi_pattern(text); }

// Rhythm words use 'x' for a beat and '.' for a rest.
inline RhythmPattern rhy(const std::string& word) {
  return RhythmPattern::from_string(word);
}

inline DegreePattern deg(std::vector<Degree> degrees) {
  return DegreePattern(std::move(degrees));
}

// The five-rule system over two-voice additive patterns used throughout the
// generation tests: rules c1..c5 in order, initial color b1.
inline BudGeneratingSystem example_system() {
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 2;
  system.colors = {Color("b1"), Color("b2"), Color("b3")};
  system.initial = Color("b1");
  const Color b1("b1"), b2("b2"), b3("b3");
  system.rules.emplace_back(b1, mp("0 2 . 1 . 0 4 ; -5 . . 0 0 0 0"),
                            std::vector<Color>{b3, b2, b1, b1, b3});
  system.rules.emplace_back(b1, mp("1 . 0 ; 0 . 1"), std::vector<Color>{b1, b1});
  system.rules.emplace_back(b2, mp("-1 ; -1"), std::vector<Color>{b1});
  system.rules.emplace_back(b2, mp("0 0 ; 0 0"), std::vector<Color>{b1, b1});
  system.rules.emplace_back(b3, mp("0 ; 0"), std::vector<Color>{b3});
  return system;
}

inline Degree random_degree(const DegreeMonoid& m, SplitMix64& gen) {
  switch (m.kind()) {
    case DegreeMonoid::Kind::Additive:
      return static_cast<Degree>(gen.uniform(11)) - 5;
    case DegreeMonoid::Kind::Cyclic:
      return static_cast<Degree>(gen.uniform(static_cast<std::uint64_t>(m.modulus())));
    case DegreeMonoid::Kind::MaxBounded:
      return m.lower_bound() + static_cast<Degree>(gen.uniform(7));
  }
  return 0;
}

inline DegreePattern random_degree_pattern(const DegreeMonoid& m, SplitMix64& gen,
                                           std::size_t max_arity = 6) {
  const std::size_t arity = 1 + gen.uniform(max_arity);
  std::vector<Degree> degrees;
  degrees.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) degrees.push_back(random_degree(m, gen));
  return DegreePattern(std::move(degrees));
}

inline RhythmPattern random_rhythm_pattern(SplitMix64& gen, std::size_t max_arity = 6,
                                           std::size_t max_length = 8) {
  const std::size_t arity = 1 + gen.uniform(max_arity);
  const std::size_t rests = gen.uniform(max_length >= arity ? max_length - arity + 1 : 1);
  std::vector<Atom> atoms(arity, Atom::Beat);
  atoms.insert(atoms.end(), rests, Atom::Rest);
  for (std::size_t i = atoms.size(); i > 1; --i) {  // Fisher-Yates
    std::swap(atoms[i - 1], atoms[gen.uniform(i)]);
  }
  return RhythmPattern(std::move(atoms));
}

inline Pattern random_pattern(const DegreeMonoid& m, SplitMix64& gen,
                              std::size_t max_arity = 6, std::size_t max_length = 8) {
  const RhythmPattern rhythm = random_rhythm_pattern(gen, max_arity, max_length);
  std::vector<Degree> degrees;
  degrees.reserve(rhythm.arity());
  for (std::size_t i = 0; i < rhythm.arity(); ++i) degrees.push_back(random_degree(m, gen));
  return Pattern(DegreePattern(std::move(degrees)), rhythm);
}

inline MultiPattern random_multi_pattern(const DegreeMonoid& m, SplitMix64& gen,
                                         std::size_t multiplicity,
                                         std::size_t max_arity = 6,
                                         std::size_t max_length = 8) {
  const Pattern first = random_pattern(m, gen, max_arity, max_length);
  std::vector<Pattern> rows{first};
  for (std::size_t i = 1; i < multiplicity; ++i) {
    // Same arity and length, independent content.
    std::vector<Atom> atoms(first.arity(), Atom::Beat);
    atoms.insert(atoms.end(), first.length() - first.arity(), Atom::Rest);
    for (std::size_t j = atoms.size(); j > 1; --j) {
      std::swap(atoms[j - 1], atoms[gen.uniform(j)]);
    }
    std::vector<Degree> degrees;
    degrees.reserve(first.arity());
    for (std::size_t j = 0; j < first.arity(); ++j) degrees.push_back(random_degree(m, gen));
    rows.emplace_back(DegreePattern(std::move(degrees)), RhythmPattern(std::move(atoms)));
  }
  return MultiPattern(std::move(rows));
}

inline std::vector<DegreeMonoid> all_monoids() {
  return {DegreeMonoid::additive(), DegreeMonoid::cyclic(3), DegreeMonoid::cyclic(7),
          DegreeMonoid::max_bounded(0), DegreeMonoid::max_bounded(-4)};
}

}  // namespace testsupport
