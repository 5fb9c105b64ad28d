#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/pattern.hpp"

namespace musicbox {

inline DegreePattern mirror(const DegreePattern& d) {
  std::vector<Degree> rev(d.degrees().rbegin(), d.degrees().rend());
  return DegreePattern(std::move(rev));
}

inline RhythmPattern mirror(const RhythmPattern& r) {
  std::vector<Atom> rev(r.atoms().rbegin(), r.atoms().rend());
  return RhythmPattern(std::move(rev));
}

inline Pattern mirror(const Pattern& p) {
  return Pattern(mirror(p.degrees()), mirror(p.rhythm()));
}

// Retrograde: every row read right to left. Operad anti-automorphism.
inline MultiPattern mirror(const MultiPattern& x) {
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (const Pattern& row : x.rows()) rows.push_back(mirror(row));
  return MultiPattern(std::move(rows));
}

namespace detail {

inline Degree checked_mul(Degree a, Degree b) {
  Degree out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CarrierError("degree multiplication overflows: " + std::to_string(a) +
                       " * " + std::to_string(b));
  }
  return out;
}

inline void require_additive(const DegreeMonoid& m, const char* op) {
  if (m.kind() != DegreeMonoid::Kind::Additive) {
    throw MonoidError(std::string(op) + " is only defined over the additive monoid, got " +
                      m.describe());
  }
}

inline Pattern map_row_degrees(const Pattern& p,
                               const std::function<Degree(Degree)>& f) {
  std::vector<Degree> out;
  out.reserve(p.arity());
  for (Degree d : p.degrees().degrees()) out.push_back(f(d));
  return Pattern(DegreePattern(std::move(out)), p.rhythm());
}

}  // namespace detail

// Degree scaling d -> alpha_i * d on row i; endomorphism of the additive
// music box operad.
inline MultiPattern multiply_degrees(const DegreeMonoid& m, const MultiPattern& x,
                                     std::span<const Degree> per_row) {
  detail::require_additive(m, "multiply_degrees");
  if (per_row.size() != x.multiplicity()) {
    throw ArgumentError("need one factor per row: " + std::to_string(per_row.size()) +
                        " factors for " + std::to_string(x.multiplicity()) + " rows");
  }
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (std::size_t i = 0; i < x.multiplicity(); ++i) {
    const Degree alpha = per_row[i];
    rows.push_back(detail::map_row_degrees(
        x.row(i), [alpha](Degree d) { return detail::checked_mul(alpha, d); }));
  }
  return MultiPattern(std::move(rows));
}

inline MultiPattern multiply_degrees(const DegreeMonoid& m, const MultiPattern& x,
                                     Degree alpha) {
  std::vector<Degree> factors(x.multiplicity(), alpha);
  return multiply_degrees(m, x, factors);
}

// Reduction d -> d mod k, mapping additive patterns onto cyclic(k) ones.
inline MultiPattern reduce_degrees(std::int64_t k, const MultiPattern& x) {
  if (k < 1) throw ArgumentError("reduction modulus must be >= 1");
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (const Pattern& row : x.rows()) {
    rows.push_back(detail::map_row_degrees(
        row, [k](Degree d) { return ((d % k) + k) % k; }));
  }
  return MultiPattern(std::move(rows));
}

// Map between max-monoid carriers [z, inf) -> [z', inf) that fixes the roots
// and preserves order. Monotonicity can only be probed pointwise, so it is
// checked on the degrees an application actually touches.
class RootedWeaklyIncreasingMap {
 public:
  RootedWeaklyIncreasingMap(Degree source_lower_bound, Degree target_lower_bound,
                            std::function<Degree(Degree)> map)
      : source_lower_bound_(source_lower_bound),
        target_lower_bound_(target_lower_bound),
        map_(std::move(map)) {
    if (map_(source_lower_bound_) != target_lower_bound_) {
      throw MonotonicityError("map does not send source root " +
                              std::to_string(source_lower_bound_) + " to target root " +
                              std::to_string(target_lower_bound_));
    }
  }

  Degree source_lower_bound() const { return source_lower_bound_; }
  Degree target_lower_bound() const { return target_lower_bound_; }
  Degree apply(Degree d) const { return map_(d); }

 private:
  Degree source_lower_bound_;
  Degree target_lower_bound_;
  std::function<Degree(Degree)> map_;
};

inline MultiPattern increase_degrees(const DegreeMonoid& m,
                                     const RootedWeaklyIncreasingMap& theta,
                                     const MultiPattern& x) {
  if (m.kind() != DegreeMonoid::Kind::MaxBounded) {
    throw MonoidError("increase_degrees is only defined over a max monoid, got " +
                      m.describe());
  }
  if (m.lower_bound() != theta.source_lower_bound()) {
    throw MonoidError("map expects carrier [" +
                      std::to_string(theta.source_lower_bound()) + ", inf), monoid is " +
                      m.describe());
  }
  // Probe monotonicity on the root plus every degree present in the input.
  std::set<Degree> probes{theta.source_lower_bound()};
  for (const Pattern& row : x.rows()) {
    for (Degree d : row.degrees().degrees()) {
      m.require_member(d);
      probes.insert(d);
    }
  }
  Degree prev_in = 0;
  Degree prev_out = 0;
  bool first = true;
  for (Degree d : probes) {
    const Degree out = theta.apply(d);
    if (out < theta.target_lower_bound()) {
      throw MonotonicityError("map sends " + std::to_string(d) +
                              " below the target root");
    }
    if (!first && prev_in <= d && out < prev_out) {
      throw MonotonicityError("map decreases between " + std::to_string(prev_in) +
                              " and " + std::to_string(d));
    }
    prev_in = d;
    prev_out = out;
    first = false;
  }
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (const Pattern& row : x.rows()) {
    rows.push_back(detail::map_row_degrees(
        row, [&theta](Degree d) { return theta.apply(d); }));
  }
  return MultiPattern(std::move(rows));
}

// Rest dilation: every rest becomes beta rests (beta = 0 deletes rests).
// Degrees are untouched, so arity is preserved.
inline RhythmPattern dilate_rests(std::int64_t beta, const RhythmPattern& r) {
  if (beta < 0) throw ArgumentError("dilation factor must be >= 0");
  std::vector<Atom> out;
  for (Atom a : r.atoms()) {
    if (a == Atom::Beat) {
      out.push_back(a);
    } else {
      for (std::int64_t j = 0; j < beta; ++j) out.push_back(Atom::Rest);
    }
  }
  return RhythmPattern(std::move(out));
}

inline MultiPattern dilate_rests(std::int64_t beta, const MultiPattern& x) {
  std::vector<Pattern> rows;
  rows.reserve(x.multiplicity());
  for (const Pattern& row : x.rows()) {
    rows.push_back(Pattern(row.degrees(), dilate_rests(beta, row.rhythm())));
  }
  return MultiPattern(std::move(rows));
}

// m identical copies of a pattern, stacked. Injective operad morphism from
// patterns into multi-patterns of multiplicity m.
inline MultiPattern replicate(const Pattern& p, std::size_t multiplicity) {
  if (multiplicity < 1) throw ArgumentError("multiplicity must be >= 1");
  return MultiPattern(std::vector<Pattern>(multiplicity, p));
}

// (d, beat^n): a degree pattern heard as all-beats.
inline Pattern to_pattern(const DegreePattern& d) {
  return Pattern(d, RhythmPattern(std::vector<Atom>(d.arity(), Atom::Beat)));
}

// (e^n, r): a rhythm pattern heard on the unit degree.
inline Pattern to_pattern(const DegreeMonoid& m, const RhythmPattern& r) {
  return Pattern(DegreePattern(std::vector<Degree>(r.arity(), m.unit())), r);
}

// Composition tree over some carrier T: either the operad unit, a leaf
// holding a generator, or a partial composition of two subtrees.
template <typename T>
class CompositionTree {
 public:
  static CompositionTree unit() { return CompositionTree(nullptr); }

  static CompositionTree leaf(T value) {
    return CompositionTree(std::make_shared<const Node>(Node{std::move(value)}));
  }

  static CompositionTree compose(CompositionTree left, std::size_t position,
                                 CompositionTree right) {
    return CompositionTree(std::make_shared<const Node>(
        Node{Branch{std::move(left), position, std::move(right)}}));
  }

  bool is_unit() const { return node_ == nullptr; }

  std::size_t leaf_count() const {
    if (!node_) return 0;
    if (const T* value = std::get_if<T>(&node_->content)) {
      (void)value;
      return 1;
    }
    const Branch& b = std::get<Branch>(node_->content);
    return b.left.leaf_count() + b.right.leaf_count();
  }

  // Evaluates the tree bottom-up. `unit_value` stands in for unit nodes and
  // `compose_fn(x, i, y)` performs one partial composition.
  template <typename ComposeFn>
  T evaluate(const T& unit_value, ComposeFn&& compose_fn) const {
    if (!node_) return unit_value;
    if (const T* value = std::get_if<T>(&node_->content)) return *value;
    const Branch& b = std::get<Branch>(node_->content);
    return compose_fn(b.left.evaluate(unit_value, compose_fn), b.position,
                      b.right.evaluate(unit_value, compose_fn));
  }

 private:
  struct Branch {
    CompositionTree left;
    std::size_t position;
    CompositionTree right;
  };
  struct Node {
    std::variant<T, Branch> content;
  };

  explicit CompositionTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

// Left-comb chain g o_1 (g o_1 (... o_1 g)) of `count` copies of one leaf,
// folded as ((g o_1 g) o_1 g)...
template <typename T>
CompositionTree<T> comb_chain(const T& generator, std::size_t count) {
  CompositionTree<T> tree = CompositionTree<T>::unit();
  for (std::size_t j = 0; j < count; ++j) {
    auto leaf = CompositionTree<T>::leaf(generator);
    tree = tree.is_unit() ? std::move(leaf)
                          : CompositionTree<T>::compose(std::move(tree), 1, std::move(leaf));
  }
  return tree;
}

template <typename T>
CompositionTree<T> attach(CompositionTree<T> base, std::size_t position,
                          CompositionTree<T> slot) {
  if (slot.is_unit()) return base;  // composing with the unit is the identity
  if (base.is_unit()) return slot;  // only happens for position 1
  return CompositionTree<T>::compose(std::move(base), position, std::move(slot));
}

}  // namespace detail

// Decomposes a rhythm pattern over the generators {.x, x., xx}: an (n-1)-fold
// xx chain receives one arity-one slot rest^{a} x rest^{b} per beat.
inline CompositionTree<RhythmPattern> decompose_rhythm(const RhythmPattern& r) {
  using Tree = CompositionTree<RhythmPattern>;
  const RhythmPattern rest_beat({Atom::Rest, Atom::Beat});
  const RhythmPattern beat_rest({Atom::Beat, Atom::Rest});
  const RhythmPattern beat_beat({Atom::Beat, Atom::Beat});

  const DurationSequence gaps = to_durations(r);
  const std::size_t n = r.arity();
  Tree tree = detail::comb_chain(beat_beat, n - 1);
  for (std::size_t i = n; i >= 1; --i) {
    const std::int64_t before = i == 1 ? gaps[0] : 0;
    const std::int64_t after = gaps[i];
    Tree slot = detail::attach(detail::comb_chain(rest_beat, static_cast<std::size_t>(before)),
                               1,
                               detail::comb_chain(beat_rest, static_cast<std::size_t>(after)));
    tree = detail::attach(std::move(tree), i, std::move(slot));
  }
  return tree;
}

inline RhythmPattern evaluate(const CompositionTree<RhythmPattern>& tree) {
  return tree.evaluate(unit_rhythm_pattern(),
                       [](const RhythmPattern& a, std::size_t i, const RhythmPattern& b) {
                         return compose(a, i, b);
                       });
}

namespace detail {

// Chain of monoid generators multiplying out to the degree d, as arity-one
// all-beat patterns. Empty tree when d is the unit.
inline CompositionTree<Pattern> degree_chain(const DegreeMonoid& m, Degree d) {
  using Tree = CompositionTree<Pattern>;
  m.require_member(d);
  switch (m.kind()) {
    case DegreeMonoid::Kind::Additive: {
      if (d == 0) return Tree::unit();
      const Pattern step = to_pattern(DegreePattern({d > 0 ? 1 : -1}));
      return comb_chain(step, static_cast<std::size_t>(d > 0 ? d : -d));
    }
    case DegreeMonoid::Kind::Cyclic: {
      if (d == 0) return Tree::unit();
      const Pattern step = to_pattern(DegreePattern({1}));
      return comb_chain(step, static_cast<std::size_t>(d));
    }
    case DegreeMonoid::Kind::MaxBounded: {
      // Every non-unit element of a max monoid is its own generator.
      if (d == m.unit()) return Tree::unit();
      return Tree::leaf(to_pattern(DegreePattern({d})));
    }
  }
  return Tree::unit();
}

}  // namespace detail

// Decomposes a pattern over the generators of its monoid together with
// {.e, e., ee}. The evaluation of the returned tree equals p; the tree shape
// is the canonical left comb of the constructive factorization.
inline CompositionTree<Pattern> decompose_pattern(const DegreeMonoid& m, const Pattern& p) {
  using Tree = CompositionTree<Pattern>;
  const Pattern rest_unit = Pattern(unit_degree_pattern(m),
                                    RhythmPattern({Atom::Rest, Atom::Beat}));
  const Pattern unit_rest = Pattern(unit_degree_pattern(m),
                                    RhythmPattern({Atom::Beat, Atom::Rest}));
  const Pattern unit_unit = Pattern(DegreePattern({m.unit(), m.unit()}),
                                    RhythmPattern({Atom::Beat, Atom::Beat}));

  const DurationSequence gaps = to_durations(p.rhythm());
  const std::size_t n = p.arity();
  Tree tree = detail::comb_chain(unit_unit, n - 1);
  for (std::size_t i = n; i >= 1; --i) {
    const std::int64_t before = i == 1 ? gaps[0] : 0;
    const std::int64_t after = gaps[i];
    Tree slot = detail::attach(
        detail::attach(detail::comb_chain(rest_unit, static_cast<std::size_t>(before)), 1,
                       detail::comb_chain(unit_rest, static_cast<std::size_t>(after))),
        1, detail::degree_chain(m, p.degrees().at(i - 1)));
    tree = detail::attach(std::move(tree), i, std::move(slot));
  }
  return tree;
}

inline Pattern evaluate(const DegreeMonoid& m, const CompositionTree<Pattern>& tree) {
  return tree.evaluate(unit_pattern(m),
                       [&m](const Pattern& a, std::size_t i, const Pattern& b) {
                         return compose(m, a, i, b);
                       });
}

}  // namespace musicbox
