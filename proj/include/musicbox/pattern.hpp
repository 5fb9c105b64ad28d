#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"

namespace musicbox {

enum class Atom : unsigned char { Rest, Beat };

// Nonempty word of degrees. Arity = length of the word.
class DegreePattern {
 public:
  explicit DegreePattern(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) {
      throw FormatError("a degree pattern must contain at least one degree");
    }
  }

  DegreePattern(std::initializer_list<Degree> degrees)
      : DegreePattern(std::vector<Degree>(degrees)) {}

  std::size_t arity() const { return degrees_.size(); }
  const std::vector<Degree>& degrees() const { return degrees_; }
  Degree at(std::size_t index) const { return degrees_.at(index); }

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;

 private:
  std::vector<Degree> degrees_;
};

// Word over {Rest, Beat} with at least one Beat. Arity counts beats,
// length counts atoms.
class RhythmPattern {
 public:
  explicit RhythmPattern(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    arity_ = 0;
    for (Atom a : atoms_) {
      if (a == Atom::Beat) ++arity_;
    }
    if (arity_ == 0) {
      throw FormatError("a rhythm pattern must contain at least one beat");
    }
  }

  RhythmPattern(std::initializer_list<Atom> atoms)
      : RhythmPattern(std::vector<Atom>(atoms)) {}

  // Accepts words over {'.', 'x'}: '.' is a rest, 'x' a beat.
  static RhythmPattern from_string(const std::string& word) {
    std::vector<Atom> atoms;
    atoms.reserve(word.size());
    for (char c : word) {
      switch (c) {
        case '.':
          atoms.push_back(Atom::Rest);
          break;
        case 'x':
          atoms.push_back(Atom::Beat);
          break;
        default:
          throw FormatError(std::string("bad rhythm atom '") + c + "'");
      }
    }
    return RhythmPattern(std::move(atoms));
  }

  std::size_t length() const { return atoms_.size(); }
  std::size_t arity() const { return arity_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  friend bool operator==(const RhythmPattern&, const RhythmPattern&) = default;

 private:
  std::vector<Atom> atoms_;
  std::size_t arity_;
};

// Gap sequence (sigma_1, ..., sigma_{n+1}) of a rhythm pattern of arity n:
// the pattern reads rest^{sigma_1} beat rest^{sigma_2} ... beat rest^{sigma_{n+1}}.
using DurationSequence = std::vector<std::int64_t>;

inline DurationSequence to_durations(const RhythmPattern& r) {
  DurationSequence gaps;
  gaps.reserve(r.arity() + 1);
  std::int64_t run = 0;
  for (Atom a : r.atoms()) {
    if (a == Atom::Beat) {
      gaps.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  gaps.push_back(run);
  return gaps;
}

inline RhythmPattern from_durations(const DurationSequence& gaps) {
  if (gaps.size() < 2) {
    throw FormatError("a duration sequence needs at least two entries, got " +
                      std::to_string(gaps.size()));
  }
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 0) {
      throw FormatError("duration sequence entries must be nonnegative");
    }
    for (std::int64_t j = 0; j < gaps[i]; ++j) atoms.push_back(Atom::Rest);
    if (i + 1 < gaps.size()) atoms.push_back(Atom::Beat);
  }
  return RhythmPattern(std::move(atoms));
}

// A degree pattern and a rhythm pattern of equal arity. In concise form the
// pattern is a word over {rest} + Z whose j-th beat carries the j-th degree.
class Pattern {
 public:
  Pattern(DegreePattern degrees, RhythmPattern rhythm)
      : degrees_(std::move(degrees)), rhythm_(std::move(rhythm)) {
    if (degrees_.arity() != rhythm_.arity()) {
      throw FormatError("pattern parts disagree: " + std::to_string(degrees_.arity()) +
                        " degrees vs " + std::to_string(rhythm_.arity()) + " beats");
    }
  }

  std::size_t arity() const { return degrees_.arity(); }
  std::size_t length() const { return rhythm_.length(); }
  const DegreePattern& degrees() const { return degrees_; }
  const RhythmPattern& rhythm() const { return rhythm_; }

  // Concise-word view: one entry per atom, nullopt for a rest.
  std::vector<std::optional<Degree>> cells() const {
    std::vector<std::optional<Degree>> out;
    out.reserve(length());
    std::size_t beat = 0;
    for (Atom a : rhythm_.atoms()) {
      if (a == Atom::Beat) {
        out.emplace_back(degrees_.at(beat++));
      } else {
        out.emplace_back(std::nullopt);
      }
    }
    return out;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  DegreePattern degrees_;
  RhythmPattern rhythm_;
};

// Stacked patterns of equal arity and equal length, one voice per row.
class MultiPattern {
 public:
  explicit MultiPattern(std::vector<Pattern> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
      throw FormatError("a multi-pattern must contain at least one row");
    }
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      if (rows_[i].arity() != rows_[0].arity()) {
        throw FormatError("rows 1 and " + std::to_string(i + 1) +
                          " have different arities (" + std::to_string(rows_[0].arity()) +
                          " vs " + std::to_string(rows_[i].arity()) + ")");
      }
      if (rows_[i].length() != rows_[0].length()) {
        throw FormatError("rows 1 and " + std::to_string(i + 1) +
                          " have different lengths (" + std::to_string(rows_[0].length()) +
                          " vs " + std::to_string(rows_[i].length()) + ")");
      }
    }
  }

  MultiPattern(std::initializer_list<Pattern> rows)
      : MultiPattern(std::vector<Pattern>(rows)) {}

  std::size_t multiplicity() const { return rows_.size(); }
  std::size_t arity() const { return rows_[0].arity(); }
  std::size_t length() const { return rows_[0].length(); }
  const std::vector<Pattern>& rows() const { return rows_; }
  const Pattern& row(std::size_t index) const { return rows_.at(index); }

  friend bool operator==(const MultiPattern&, const MultiPattern&) = default;

 private:
  std::vector<Pattern> rows_;
};

inline DegreePattern unit_degree_pattern(const DegreeMonoid& m) {
  return DegreePattern({m.unit()});
}

inline RhythmPattern unit_rhythm_pattern() { return RhythmPattern({Atom::Beat}); }

inline Pattern unit_pattern(const DegreeMonoid& m) {
  return Pattern(unit_degree_pattern(m), unit_rhythm_pattern());
}

inline MultiPattern unit_multi_pattern(const DegreeMonoid& m, std::size_t multiplicity) {
  if (multiplicity < 1) {
    throw ArgumentError("multiplicity must be >= 1");
  }
  return MultiPattern(std::vector<Pattern>(multiplicity, unit_pattern(m)));
}

namespace detail {

inline void check_position(std::size_t position, std::size_t arity) {
  if (position < 1 || position > arity) {
    throw PositionError("position " + std::to_string(position) +
                        " is outside [1, " + std::to_string(arity) + "]");
  }
}

}  // namespace detail

// Partial composition of degree patterns: the i-th letter of u is combined
// with every letter of v, and the result replaces it in place.
inline DegreePattern compose(const DegreeMonoid& m, const DegreePattern& u,
                             std::size_t position, const DegreePattern& v) {
  detail::check_position(position, u.arity());
  for (Degree d : u.degrees()) m.require_member(d);
  for (Degree d : v.degrees()) m.require_member(d);
  std::vector<Degree> out;
  out.reserve(u.arity() + v.arity() - 1);
  const Degree pivot = u.at(position - 1);
  for (std::size_t j = 0; j + 1 < position; ++j) out.push_back(u.at(j));
  for (Degree d : v.degrees()) out.push_back(m.combine(pivot, d));
  for (std::size_t j = position; j < u.arity(); ++j) out.push_back(u.at(j));
  return DegreePattern(std::move(out));
}

// Partial composition of rhythm patterns: the i-th beat of r is replaced,
// textually, by the whole word s.
inline RhythmPattern compose(const RhythmPattern& r, std::size_t position,
                             const RhythmPattern& s) {
  detail::check_position(position, r.arity());
  std::vector<Atom> out;
  out.reserve(r.length() + s.length() - 1);
  std::size_t beat = 0;
  for (Atom a : r.atoms()) {
    if (a == Atom::Beat && ++beat == position) {
      out.insert(out.end(), s.atoms().begin(), s.atoms().end());
    } else {
      out.push_back(a);
    }
  }
  return RhythmPattern(std::move(out));
}

inline Pattern compose(const DegreeMonoid& m, const Pattern& p, std::size_t position,
                       const Pattern& q) {
  return Pattern(compose(m, p.degrees(), position, q.degrees()),
                 compose(p.rhythm(), position, q.rhythm()));
}

inline void check_same_multiplicity(const MultiPattern& x, const MultiPattern& y) {
  if (x.multiplicity() != y.multiplicity()) {
    throw MultiplicityError("multiplicities differ: " + std::to_string(x.multiplicity()) +
                            " vs " + std::to_string(y.multiplicity()));
  }
}

// Row-wise partial composition; this is the music box operad product.
inline MultiPattern compose(const DegreeMonoid& m, const MultiPattern& x,
                            std::size_t position, const MultiPattern& y) {
  check_same_multiplicity(x, y);
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (std::size_t i = 0; i < x.multiplicity(); ++i) {
    rows.push_back(compose(m, x.row(i), position, y.row(i)));
  }
  return MultiPattern(std::move(rows));
}

// Full composition x o [y_1, ..., y_n]: grafts y_i onto the i-th input of x
// for every i, realized as the right-to-left fold of partial compositions.
inline MultiPattern full_compose(const DegreeMonoid& m, const MultiPattern& x,
                                 std::span<const MultiPattern> operands) {
  if (operands.size() != x.arity()) {
    throw ArityMismatchError("full composition needs " + std::to_string(x.arity()) +
                             " operands, got " + std::to_string(operands.size()));
  }
  MultiPattern acc = x;
  for (std::size_t i = operands.size(); i >= 1; --i) {
    acc = compose(m, acc, i, operands[i - 1]);
  }
  return acc;
}

inline MultiPattern full_compose(const DegreeMonoid& m, const MultiPattern& x,
                                 const std::vector<MultiPattern>& operands) {
  return full_compose(m, x, std::span<const MultiPattern>(operands));
}

// Homogeneous composition x (.) y: one copy of y on every input of x.
inline MultiPattern homogeneous_compose(const DegreeMonoid& m, const MultiPattern& x,
                                        const MultiPattern& y) {
  check_same_multiplicity(x, y);
  std::vector<MultiPattern> operands(x.arity(), y);
  return full_compose(m, x, operands);
}

}  // namespace musicbox
