#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/morphisms.hpp"
#include "musicbox/pattern.hpp"

namespace musicbox {

// A chord: at least two voices, one beat, no rests.
inline bool is_chord(const MultiPattern& x) {
  return x.multiplicity() >= 2 && x.arity() == 1 && x.length() == 1;
}

inline bool is_flat(const MultiPattern& x) {
  for (const Pattern& row : x.rows()) {
    for (Degree d : row.degrees().degrees()) {
      if (d != 0) return false;
    }
  }
  return true;
}

inline bool is_flat(const Pattern& p) { return is_flat(MultiPattern({p})); }

// Flat, two or more voices, one beat per voice, and at most one voice
// sounding in any column.
inline bool is_arpeggio_shape(const MultiPattern& x) {
  if (!is_flat(x) || x.multiplicity() < 2 || x.arity() != 1) return false;
  for (std::size_t j = 0; j < x.length(); ++j) {
    std::size_t sounding = 0;
    for (const Pattern& row : x.rows()) {
      if (row.rhythm().atoms()[j] == Atom::Beat) ++sounding;
    }
    if (sounding > 1) return false;
  }
  return true;
}

// An arpeggio factors as chord (.) shape. Each row has exactly one beat, so
// the factorization, when it exists, extracts the unique degree of each row
// and leaves a flat residue that must be an arpeggio shape.
inline bool is_arpeggio(const MultiPattern& x) {
  if (x.multiplicity() < 2 || x.arity() != 1) return false;
  std::vector<Pattern> zeroed;
  zeroed.reserve(x.multiplicity());
  for (const Pattern& row : x.rows()) {
    zeroed.push_back(Pattern(DegreePattern({0}), row.rhythm()));
  }
  return is_arpeggio_shape(MultiPattern(std::move(zeroed)));
}

// Mimesis of x according to y: x heard with every beat replaced by a
// transposed copy of y. Alias of the homogeneous composition.
inline MultiPattern mimesis(const DegreeMonoid& m, const MultiPattern& x,
                            const MultiPattern& y) {
  return homogeneous_compose(m, x, y);
}

inline MultiPattern concatenate(const DegreeMonoid& m, const MultiPattern& x,
                                const MultiPattern& y) {
  check_same_multiplicity(x, y);
  const Pattern glue = Pattern(DegreePattern({m.unit(), m.unit()}),
                               RhythmPattern({Atom::Beat, Atom::Beat}));
  const std::vector<MultiPattern> operands{x, y};
  return full_compose(m, replicate(glue, x.multiplicity()), operands);
}

inline MultiPattern repeat(const DegreeMonoid& m, std::size_t times,
                           const MultiPattern& x) {
  if (times < 1) throw ArgumentError("repetition count must be >= 1");
  const Pattern beats = Pattern(DegreePattern(std::vector<Degree>(times, m.unit())),
                                RhythmPattern(std::vector<Atom>(times, Atom::Beat)));
  return homogeneous_compose(m, replicate(beats, x.multiplicity()), x);
}

inline MultiPattern transpose(const DegreeMonoid& m, Degree by, const MultiPattern& x) {
  return homogeneous_compose(m, replicate(to_pattern(DegreePattern({by})), x.multiplicity()),
                             x);
}

// Temporization: k extra rests after every beat.
inline MultiPattern temporize(const DegreeMonoid& m, std::size_t units,
                              const MultiPattern& x) {
  std::vector<Atom> atoms{Atom::Beat};
  atoms.insert(atoms.end(), units, Atom::Rest);
  const Pattern pause = Pattern(DegreePattern({m.unit()}), RhythmPattern(std::move(atoms)));
  return homogeneous_compose(m, x, replicate(pause, x.multiplicity()));
}

inline MultiPattern inverse(const DegreeMonoid& m, const MultiPattern& x) {
  return multiply_degrees(m, x, -1);
}

inline MultiPattern retrograde(const MultiPattern& x) { return mirror(x); }

inline MultiPattern retrograde_inverse(const DegreeMonoid& m, const MultiPattern& x) {
  return mirror(inverse(m, x));
}

inline MultiPattern harmonize(const DegreeMonoid& m, const Pattern& p,
                              const MultiPattern& chord) {
  if (!is_chord(chord)) {
    throw NotAChordError("harmonization needs a chord (>= 2 voices, single beat)");
  }
  return homogeneous_compose(m, replicate(p, chord.multiplicity()), chord);
}

inline MultiPattern arpeggiate(const DegreeMonoid& m, const Pattern& p,
                               const MultiPattern& arpeggio) {
  if (!is_arpeggio(arpeggio)) {
    throw NotAnArpeggioError("arpeggiation needs an arpeggio (chord spread over a shape)");
  }
  return homogeneous_compose(m, replicate(p, arpeggio.multiplicity()), arpeggio);
}

// The homogeneous operations: exactly those preserving arity and length.
// These are the transformations a preset may be parametrized with.
struct HomogeneousOp {
  enum class Kind { Identity, Inverse, Retrograde, RetrogradeInverse, Transpose };

  Kind kind = Kind::Identity;
  Degree amount = 0;  // Transpose only

  static HomogeneousOp identity() { return {Kind::Identity, 0}; }
  static HomogeneousOp inverse() { return {Kind::Inverse, 0}; }
  static HomogeneousOp retrograde() { return {Kind::Retrograde, 0}; }
  static HomogeneousOp retrograde_inverse() { return {Kind::RetrogradeInverse, 0}; }
  static HomogeneousOp transpose(Degree by) { return {Kind::Transpose, by}; }

  friend bool operator==(const HomogeneousOp&, const HomogeneousOp&) = default;
};

inline MultiPattern apply(const DegreeMonoid& m, const HomogeneousOp& op,
                          const MultiPattern& x) {
  switch (op.kind) {
    case HomogeneousOp::Kind::Identity:
      return x;
    case HomogeneousOp::Kind::Inverse:
      return inverse(m, x);
    case HomogeneousOp::Kind::Retrograde:
      return retrograde(x);
    case HomogeneousOp::Kind::RetrogradeInverse:
      return retrograde_inverse(m, x);
    case HomogeneousOp::Kind::Transpose:
      return transpose(m, op.amount, x);
  }
  return x;
}

inline Pattern apply(const DegreeMonoid& m, const HomogeneousOp& op, const Pattern& p) {
  return apply(m, op, MultiPattern({p})).row(0);
}

// Names used in files and on the command line: id | inv | mir | minv | tran:<d>.
inline std::optional<HomogeneousOp> try_parse_homogeneous_op(std::string_view name) {
  if (name == "id") return HomogeneousOp::identity();
  if (name == "inv") return HomogeneousOp::inverse();
  if (name == "mir") return HomogeneousOp::retrograde();
  if (name == "minv") return HomogeneousOp::retrograde_inverse();
  if (name.rfind("tran:", 0) == 0) {
    const std::string digits(name.substr(5));
    try {
      std::size_t used = 0;
      const long long by = std::stoll(digits, &used);
      if (used == digits.size()) return HomogeneousOp::transpose(by);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

inline HomogeneousOp parse_homogeneous_op(std::string_view name) {
  if (auto op = try_parse_homogeneous_op(name)) return *op;
  throw NotHomogeneousError("'" + std::string(name) +
                            "' is not a homogeneous operation (expected id, inv, mir, "
                            "minv, or tran:<d>)");
}

inline bool is_homogeneous_op(std::string_view name) {
  return try_parse_homogeneous_op(name).has_value();
}

inline std::string to_string(const HomogeneousOp& op) {
  switch (op.kind) {
    case HomogeneousOp::Kind::Identity:
      return "id";
    case HomogeneousOp::Kind::Inverse:
      return "inv";
    case HomogeneousOp::Kind::Retrograde:
      return "mir";
    case HomogeneousOp::Kind::RetrogradeInverse:
      return "minv";
    case HomogeneousOp::Kind::Transpose:
      return "tran:" + std::to_string(op.amount);
  }
  return "id";
}

}  // namespace musicbox
