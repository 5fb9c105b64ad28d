#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "musicbox/budgen.hpp"
#include "musicbox/music_ops.hpp"
#include "musicbox/pattern.hpp"

namespace musicbox {

// The six stock bud generating systems. Each wraps an input pattern (plus
// auxiliary data) into a small grammar whose derivations produce variations
// of that pattern. All of them work over the additive monoid.

namespace detail {

inline std::vector<Color> three_colors() {
  return {Color("b1"), Color("b2"), Color("b3")};
}

}  // namespace detail

// Variations of p where beat durations may stretch by up to t extra rests.
// The terminal color b3 keeps any one beat from being stretched twice by the
// same derivation branch.
inline BudGeneratingSystem temporizer_system(const Pattern& p, std::size_t t) {
  if (t < 1) throw ArgumentError("temporizer stretch must be >= 1");
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 1;
  system.colors = detail::three_colors();
  system.initial = Color("b1");
  const std::vector<Color> body_inputs(p.arity(), Color("b2"));
  system.rules.emplace_back(Color("b1"), MultiPattern({p}), body_inputs);
  system.rules.emplace_back(Color("b2"), MultiPattern({p}), body_inputs);
  for (std::size_t j = 1; j <= t; ++j) {
    std::vector<Atom> atoms{Atom::Beat};
    atoms.insert(atoms.end(), j, Atom::Rest);
    const Pattern pause(DegreePattern({0}), RhythmPattern(std::move(atoms)));
    system.rules.emplace_back(Color("b2"), MultiPattern({pause}),
                              std::vector<Color>{Color("b3")});
  }
  return system;
}

// Variations of p where single beats are expanded through the flat pattern
// p_flat (a purely rhythmic figure).
inline BudGeneratingSystem rhythmic_system(const Pattern& p, const Pattern& p_flat) {
  if (!is_flat(p_flat)) {
    throw NotFlatError("the rhythmic figure must be flat (all degrees 0)");
  }
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 1;
  system.colors = detail::three_colors();
  system.initial = Color("b1");
  system.rules.emplace_back(Color("b1"), MultiPattern({p}),
                            std::vector<Color>(p.arity(), Color("b2")));
  system.rules.emplace_back(Color("b2"), MultiPattern({p}),
                            std::vector<Color>(p.arity(), Color("b2")));
  system.rules.emplace_back(Color("b2"), MultiPattern({p_flat}),
                            std::vector<Color>(p_flat.arity(), Color("b3")));
  return system;
}

// Self-composition of conc(p, op(p)); a single color, a single rule.
inline BudGeneratingSystem concatenating_system(const Pattern& p, const HomogeneousOp& op) {
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 1;
  system.colors = {Color("b1")};
  system.initial = Color("b1");
  const MultiPattern body = concatenate(system.monoid, MultiPattern({p}),
                                        MultiPattern({apply(system.monoid, op, p)}));
  system.rules.emplace_back(Color("b1"), body,
                            std::vector<Color>(body.arity(), Color("b1")));
  return system;
}

// Harmonized variations of p; the chord rule is terminal so each beat is
// harmonized at most once.
inline BudGeneratingSystem harmonizator_system(const Pattern& p, const MultiPattern& chord) {
  if (!is_chord(chord)) {
    throw NotAChordError("the harmonizator needs a chord (>= 2 voices, single beat)");
  }
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = chord.multiplicity();
  system.colors = detail::three_colors();
  system.initial = Color("b1");
  const MultiPattern body = replicate(p, chord.multiplicity());
  const std::vector<Color> body_inputs(p.arity(), Color("b2"));
  system.rules.emplace_back(Color("b1"), body, body_inputs);
  system.rules.emplace_back(Color("b2"), body, body_inputs);
  system.rules.emplace_back(Color("b2"), chord, std::vector<Color>{Color("b3")});
  return system;
}

// Arpeggiated variations of p, with the arpeggio rule terminal.
inline BudGeneratingSystem arpeggiator_system(const Pattern& p, const MultiPattern& arpeggio) {
  if (!is_arpeggio(arpeggio)) {
    throw NotAnArpeggioError("the arpeggiator needs an arpeggio");
  }
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = arpeggio.multiplicity();
  system.colors = detail::three_colors();
  system.initial = Color("b1");
  const MultiPattern body = replicate(p, arpeggio.multiplicity());
  const std::vector<Color> body_inputs(p.arity(), Color("b2"));
  system.rules.emplace_back(Color("b1"), body, body_inputs);
  system.rules.emplace_back(Color("b2"), body, body_inputs);
  system.rules.emplace_back(Color("b2"), arpeggio, std::vector<Color>{Color("b3")});
  return system;
}

// Self-composition of the two-voice stack [p ; op(p)].
inline BudGeneratingSystem stacking_system(const Pattern& p, const HomogeneousOp& op) {
  BudGeneratingSystem system;
  system.monoid = DegreeMonoid::additive();
  system.multiplicity = 2;
  system.colors = {Color("b1")};
  system.initial = Color("b1");
  const MultiPattern body({p, apply(system.monoid, op, p)});
  system.rules.emplace_back(Color("b1"), body,
                            std::vector<Color>(p.arity(), Color("b1")));
  return system;
}

}  // namespace musicbox
