#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"

namespace musicbox {

// A note of an eta tone equal temperament: step index within the octave plus
// an octave index. Middle C is <0,4> in 12-TET.
struct Note {
  int step = 0;
  int octave = 4;
  int eta = 12;

  Note(int step_index, int octave_index, int eta_steps = 12)
      : step(step_index), octave(octave_index), eta(eta_steps) {
    if (eta < 1) throw ArgumentError("eta must be >= 1");
    if (step < 0 || step >= eta) {
      throw ArgumentError("step index " + std::to_string(step) + " is outside [0, " +
                          std::to_string(eta - 1) + "]");
    }
  }

  friend bool operator==(const Note&, const Note&) = default;
};

// An integer composition of eta: the step gaps between consecutive notes.
struct Scale {
  std::vector<int> parts;
  int eta = 12;

  explicit Scale(std::vector<int> gap_parts) : parts(std::move(gap_parts)) {
    if (parts.empty()) throw ArgumentError("a scale needs at least one part");
    eta = 0;
    for (int part : parts) {
      if (part < 0) throw ArgumentError("scale parts must be nonnegative");
      eta += part;
    }
    if (eta < 1) throw ArgumentError("scale parts must sum to a positive eta");
  }

  std::size_t size() const { return parts.size(); }

  friend bool operator==(const Scale&, const Scale&) = default;
};

struct RootedScale {
  Scale scale;
  Note root;

  RootedScale(Scale s, Note r) : scale(std::move(s)), root(r) {
    if (root.eta != scale.eta) {
      throw ArgumentError("root is in " + std::to_string(root.eta) +
                          "-TET but the scale spans " + std::to_string(scale.eta));
    }
  }

  friend bool operator==(const RootedScale&, const RootedScale&) = default;
};

// How to hear a multi-pattern: which rooted scale resolves degrees, and how
// many atoms (eighths of a whole note) pass per minute.
struct Interpretation {
  RootedScale rooted_scale;
  int tempo = 128;

  Interpretation(RootedScale rs, int atoms_per_minute)
      : rooted_scale(std::move(rs)), tempo(atoms_per_minute) {
    if (tempo < 1) throw ArgumentError("tempo must be >= 1");
  }
};

// The distinct step indices reachable from the root, ascending. Zero parts
// produce duplicate steps, which collapse here.
inline std::vector<int> scale_step_indices(const RootedScale& rs) {
  std::vector<int> steps;
  steps.reserve(rs.scale.size());
  int cursor = rs.root.step;
  for (std::size_t i = 0; i < rs.scale.size(); ++i) {
    steps.push_back(cursor % rs.scale.eta);
    cursor = (cursor + rs.scale.parts[i]) % rs.scale.eta;
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

// Resolves a degree to the d-th note above (below, for negatives) the root in
// the pitch order of the rooted scale's note set.
inline Note degree_to_note(const RootedScale& rs, Degree d) {
  const std::vector<int> steps = scale_step_indices(rs);
  const std::int64_t count = static_cast<std::int64_t>(steps.size());
  const std::int64_t root_slot =
      std::find(steps.begin(), steps.end(), rs.root.step) - steps.begin();
  const std::int64_t index = static_cast<std::int64_t>(rs.root.octave) * count + root_slot + d;
  std::int64_t octave = index / count;
  std::int64_t slot = index % count;
  if (slot < 0) {  // mathematical floor division
    slot += count;
    --octave;
  }
  return Note(steps[static_cast<std::size_t>(slot)], static_cast<int>(octave), rs.scale.eta);
}

// MIDI key number; middle C <0,4> maps to 60.
inline int note_to_midi(const Note& n) {
  if (n.eta != 12) {
    throw EtaError("MIDI export needs 12-TET, got eta = " + std::to_string(n.eta));
  }
  return 12 * (n.octave + 1) + n.step;
}

inline std::optional<Scale> scale_by_name(std::string_view name) {
  if (name == "major") return Scale({2, 2, 1, 2, 2, 2, 1});
  if (name == "minor_natural") return Scale({2, 1, 2, 2, 1, 2, 2});
  if (name == "minor_harmonic") return Scale({2, 1, 2, 2, 1, 3, 1});
  if (name == "minor_pentatonic") return Scale({3, 2, 2, 3, 2});
  if (name == "hirajoshi") return Scale({2, 1, 4, 1, 4});
  if (name == "chromatic") return Scale({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  return std::nullopt;
}

}  // namespace musicbox
