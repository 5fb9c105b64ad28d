#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "musicbox/bud.hpp"
#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/pattern.hpp"
#include "musicbox/prng.hpp"

namespace musicbox {

// A grammar over the music box operad: colored rules rewrite the inputs of a
// growing colored multi-pattern, starting from the colored unit of the
// initial color.
struct BudGeneratingSystem {
  DegreeMonoid monoid = DegreeMonoid::additive();
  std::size_t multiplicity = 1;
  std::vector<Color> colors;
  std::vector<ColoredMultiPattern> rules;
  Color initial = Color("b1");

  // Indices into `rules` with the given output color, in rule-list order.
  std::vector<std::size_t> rules_for(const Color& color) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].output() == color) out.push_back(i);
    }
    return out;
  }
};

struct Diagnostic {
  enum class Severity { Error, Note };
  Severity severity = Severity::Error;
  std::string message;
};

// Structural checks: unknown colors and multiplicity mismatches are errors;
// colors that are unreachable or have no rules are notes, since terminal
// colors are how presets stop a derivation branch.
inline std::vector<Diagnostic> validate_system(const BudGeneratingSystem& system) {
  std::vector<Diagnostic> out;
  const auto error = [&out](std::string message) {
    out.push_back({Diagnostic::Severity::Error, std::move(message)});
  };
  const auto note = [&out](std::string message) {
    out.push_back({Diagnostic::Severity::Note, std::move(message)});
  };

  std::set<Color> declared(system.colors.begin(), system.colors.end());
  if (system.colors.empty()) error("the system declares no colors");
  if (system.multiplicity < 1) error("multiplicity must be >= 1");
  if (!declared.count(system.initial)) {
    error("initial color " + system.initial.name() + " is not declared");
  }
  for (std::size_t i = 0; i < system.rules.size(); ++i) {
    const ColoredMultiPattern& rule = system.rules[i];
    const std::string label = "rule " + std::to_string(i + 1);
    if (!declared.count(rule.output())) {
      error(label + " outputs undeclared color " + rule.output().name());
    }
    for (const Color& c : rule.inputs()) {
      if (!declared.count(c)) {
        error(label + " uses undeclared input color " + c.name());
      }
    }
    if (rule.multiplicity() != system.multiplicity) {
      error(label + " has multiplicity " + std::to_string(rule.multiplicity()) +
            ", system declares " + std::to_string(system.multiplicity));
    }
  }

  // Reachability from the initial color through rule input words.
  std::set<Color> reachable{system.initial};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const ColoredMultiPattern& rule : system.rules) {
      if (!reachable.count(rule.output())) continue;
      for (const Color& c : rule.inputs()) {
        if (reachable.insert(c).second) grew = true;
      }
    }
  }
  for (const Color& c : system.colors) {
    if (!reachable.count(c)) note("color " + c.name() + " is unreachable from the initial color");
    if (system.rules_for(c).empty()) note("color " + c.name() + " has no rules");
  }
  return out;
}

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::Error;
  });
}

inline void require_valid(const BudGeneratingSystem& system) {
  for (const Diagnostic& d : validate_system(system)) {
    if (d.severity == Diagnostic::Severity::Error) {
      throw InvalidSystemError(d.message);
    }
  }
}

// One recorded random choice. Replaying the recorded choices, without a
// generator, reproduces the generated multi-pattern exactly.
//
//   partial      slot is the 1-based composition position; `choices` holds
//                the 0-based index into the rules for that slot's color, or
//                is empty when the slot had no rules (a skipped iteration).
//   full         one 0-based per-slot index, ascending slots; empty = skipped.
//   homogeneous  a single 0-based index into the whole rule list.
struct DerivationStep {
  std::size_t slot = 0;
  std::vector<std::size_t> choices;

  bool skipped() const { return choices.empty(); }

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

enum class GenerationMode { Partial, Full, Homogeneous };

struct DerivationLog {
  GenerationMode mode = GenerationMode::Partial;
  std::vector<DerivationStep> steps;

  friend bool operator==(const DerivationLog&, const DerivationLog&) = default;
};

struct GenerationResult {
  MultiPattern pattern;
  DerivationLog log;
};

namespace detail {

inline ColoredMultiPattern initial_element(const BudGeneratingSystem& system) {
  return colored_unit(system.monoid, system.multiplicity, system.initial);
}

}  // namespace detail

// Partial random generation: k iterations, each drawing an input slot
// uniformly and, when that slot's color has rules, grafting one of them
// drawn uniformly. Empty-rule slots still consume the slot draw.
inline GenerationResult generate_partial(const BudGeneratingSystem& system, std::size_t k,
                                         SplitMix64& gen) {
  require_valid(system);
  ColoredMultiPattern x = detail::initial_element(system);
  DerivationLog log{GenerationMode::Partial, {}};
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t slot = static_cast<std::size_t>(gen.uniform(x.arity())) + 1;
    const std::vector<std::size_t> candidates = system.rules_for(x.input(slot));
    if (candidates.empty()) {
      log.steps.push_back({slot, {}});
      continue;
    }
    const std::size_t pick = static_cast<std::size_t>(gen.uniform(candidates.size()));
    x = compose(system.monoid, x, slot, system.rules[candidates[pick]]);
    log.steps.push_back({slot, {pick}});
  }
  return {pruning(x), std::move(log)};
}

// Full random generation: each iteration draws one rule per input slot
// (independent uniform draws, slot 1 first) and grafts them all at once.
// The iteration is skipped when any slot's color has no rules.
inline GenerationResult generate_full(const BudGeneratingSystem& system, std::size_t k,
                                      SplitMix64& gen) {
  require_valid(system);
  ColoredMultiPattern x = detail::initial_element(system);
  DerivationLog log{GenerationMode::Full, {}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<std::size_t>> per_slot;
    per_slot.reserve(x.arity());
    bool possible = true;
    for (std::size_t i = 1; i <= x.arity(); ++i) {
      per_slot.push_back(system.rules_for(x.input(i)));
      if (per_slot.back().empty()) possible = false;
    }
    if (!possible) {
      log.steps.push_back({0, {}});
      continue;
    }
    std::vector<std::size_t> picks;
    std::vector<ColoredMultiPattern> operands;
    picks.reserve(x.arity());
    operands.reserve(x.arity());
    for (std::size_t i = 0; i < x.arity(); ++i) {
      const std::size_t pick = static_cast<std::size_t>(gen.uniform(per_slot[i].size()));
      picks.push_back(pick);
      operands.push_back(system.rules[per_slot[i][pick]]);
    }
    x = full_compose(system.monoid, x, operands);
    log.steps.push_back({0, std::move(picks)});
  }
  return {pruning(x), std::move(log)};
}

// Homogeneous random generation: each iteration draws one rule from the whole
// list and grafts it homogeneously (onto every input of matching color).
inline GenerationResult generate_homogeneous(const BudGeneratingSystem& system,
                                             std::size_t k, SplitMix64& gen) {
  require_valid(system);
  if (system.rules.empty()) {
    throw EmptyRuleSetError("homogeneous generation needs a nonempty rule set");
  }
  ColoredMultiPattern x = detail::initial_element(system);
  DerivationLog log{GenerationMode::Homogeneous, {}};
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t pick = static_cast<std::size_t>(gen.uniform(system.rules.size()));
    x = homogeneous_compose(system.monoid, x, system.rules[pick]);
    log.steps.push_back({0, {pick}});
  }
  return {pruning(x), std::move(log)};
}

// Re-executes a derivation log without a generator. Any recorded choice that
// does not fit the system raises ReplayError with the 1-based step index.
inline MultiPattern replay(const BudGeneratingSystem& system, const DerivationLog& log) {
  require_valid(system);
  ColoredMultiPattern x = detail::initial_element(system);
  std::size_t step_index = 0;
  const auto fail = [&step_index](const std::string& why) {
    throw ReplayError("step " + std::to_string(step_index) + ": " + why);
  };
  for (const DerivationStep& step : log.steps) {
    ++step_index;
    switch (log.mode) {
      case GenerationMode::Partial: {
        if (step.slot < 1 || step.slot > x.arity()) {
          fail("slot " + std::to_string(step.slot) + " is outside [1, " +
               std::to_string(x.arity()) + "]");
        }
        const std::vector<std::size_t> candidates = system.rules_for(x.input(step.slot));
        if (step.skipped()) {
          if (!candidates.empty()) fail("skip recorded for a slot that has rules");
          break;
        }
        if (step.choices.size() != 1) fail("partial steps record exactly one rule choice");
        if (step.choices[0] >= candidates.size()) {
          fail("rule choice " + std::to_string(step.choices[0]) + " out of range");
        }
        x = compose(system.monoid, x, step.slot, system.rules[candidates[step.choices[0]]]);
        break;
      }
      case GenerationMode::Full: {
        if (step.skipped()) {
          bool possible = true;
          for (std::size_t i = 1; i <= x.arity(); ++i) {
            if (system.rules_for(x.input(i)).empty()) possible = false;
          }
          if (possible) fail("skip recorded for an iteration that has rules on every slot");
          break;
        }
        if (step.choices.size() != x.arity()) {
          fail("expected " + std::to_string(x.arity()) + " rule choices, got " +
               std::to_string(step.choices.size()));
        }
        std::vector<ColoredMultiPattern> operands;
        operands.reserve(x.arity());
        for (std::size_t i = 0; i < x.arity(); ++i) {
          const std::vector<std::size_t> candidates = system.rules_for(x.input(i + 1));
          if (step.choices[i] >= candidates.size()) {
            fail("rule choice " + std::to_string(step.choices[i]) + " out of range at slot " +
                 std::to_string(i + 1));
          }
          operands.push_back(system.rules[candidates[step.choices[i]]]);
        }
        x = full_compose(system.monoid, x, operands);
        break;
      }
      case GenerationMode::Homogeneous: {
        if (step.choices.size() != 1) fail("homogeneous steps record exactly one rule choice");
        if (step.choices[0] >= system.rules.size()) {
          fail("rule choice " + std::to_string(step.choices[0]) + " out of range");
        }
        x = homogeneous_compose(system.monoid, x, system.rules[step.choices[0]]);
        break;
      }
    }
  }
  return pruning(x);
}

}  // namespace musicbox
