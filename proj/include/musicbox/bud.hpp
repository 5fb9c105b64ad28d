#pragma once

#include <cctype>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/pattern.hpp"

namespace musicbox {

// A color: an identifier gating composition in the bud operad. Ordering is
// lexicographic on the name.
class Color {
 public:
  explicit Color(std::string name) : name_(std::move(name)) {
    if (name_.empty() || !(std::isalpha(static_cast<unsigned char>(name_[0])))) {
      throw FormatError("color name must start with a letter: '" + name_ + "'");
    }
    for (char c : name_) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw FormatError("color name may only contain letters, digits and '_': '" +
                          name_ + "'");
      }
    }
  }

  const std::string& name() const { return name_; }

  friend std::strong_ordering operator<=>(const Color&, const Color&) = default;

 private:
  std::string name_;
};

// A multi-pattern wrapped with an output color and one input color per beat.
class ColoredMultiPattern {
 public:
  ColoredMultiPattern(Color output, MultiPattern body, std::vector<Color> inputs)
      : output_(std::move(output)), body_(std::move(body)), inputs_(std::move(inputs)) {
    if (inputs_.size() != body_.arity()) {
      throw FormatError("need one input color per beat: " +
                        std::to_string(inputs_.size()) + " colors for arity " +
                        std::to_string(body_.arity()));
    }
  }

  const Color& output() const { return output_; }
  const MultiPattern& body() const { return body_; }
  const std::vector<Color>& inputs() const { return inputs_; }
  const Color& input(std::size_t position) const { return inputs_.at(position - 1); }
  std::size_t arity() const { return body_.arity(); }
  std::size_t multiplicity() const { return body_.multiplicity(); }

  friend bool operator==(const ColoredMultiPattern&, const ColoredMultiPattern&) = default;

 private:
  Color output_;
  MultiPattern body_;
  std::vector<Color> inputs_;
};

inline ColoredMultiPattern colored_unit(const DegreeMonoid& m, std::size_t multiplicity,
                                        const Color& color) {
  return ColoredMultiPattern(color, unit_multi_pattern(m, multiplicity), {color});
}

// Forgets the colors.
inline const MultiPattern& pruning(const ColoredMultiPattern& x) { return x.body(); }

// Color-checked partial composition: the i-th input color of x must equal the
// output color of y; the color word is substituted alongside the body.
inline ColoredMultiPattern compose(const DegreeMonoid& m, const ColoredMultiPattern& x,
                                   std::size_t position, const ColoredMultiPattern& y) {
  detail::check_position(position, x.arity());
  if (x.input(position) != y.output()) {
    throw ColorMismatchError("input " + std::to_string(position) + " of the left operand is " +
                             x.input(position).name() + " but the right operand outputs " +
                             y.output().name());
  }
  MultiPattern body = compose(m, x.body(), position, y.body());
  std::vector<Color> inputs;
  inputs.reserve(x.arity() + y.arity() - 1);
  inputs.insert(inputs.end(), x.inputs().begin(), x.inputs().begin() + (position - 1));
  inputs.insert(inputs.end(), y.inputs().begin(), y.inputs().end());
  inputs.insert(inputs.end(), x.inputs().begin() + position, x.inputs().end());
  return ColoredMultiPattern(x.output(), std::move(body), std::move(inputs));
}

// Full composition. All slots are validated before any composition happens,
// so a failure leaves nothing half-built.
inline ColoredMultiPattern full_compose(const DegreeMonoid& m, const ColoredMultiPattern& x,
                                        std::span<const ColoredMultiPattern> operands) {
  if (operands.size() != x.arity()) {
    throw ArityMismatchError("full composition needs " + std::to_string(x.arity()) +
                             " operands, got " + std::to_string(operands.size()));
  }
  for (std::size_t i = 1; i <= operands.size(); ++i) {
    if (x.input(i) != operands[i - 1].output()) {
      throw ColorMismatchError("slot " + std::to_string(i) + " expects color " +
                               x.input(i).name() + " but was given " +
                               operands[i - 1].output().name());
    }
    check_same_multiplicity(x.body(), operands[i - 1].body());
  }
  ColoredMultiPattern acc = x;
  for (std::size_t i = operands.size(); i >= 1; --i) {
    acc = compose(m, acc, i, operands[i - 1]);
  }
  return acc;
}

inline ColoredMultiPattern full_compose(const DegreeMonoid& m, const ColoredMultiPattern& x,
                                        const std::vector<ColoredMultiPattern>& operands) {
  return full_compose(m, x, std::span<const ColoredMultiPattern>(operands));
}

// Homogeneous composition: y is grafted onto exactly the inputs whose color
// matches out(y); every other input receives its colored unit.
inline ColoredMultiPattern homogeneous_compose(const DegreeMonoid& m,
                                               const ColoredMultiPattern& x,
                                               const ColoredMultiPattern& y) {
  check_same_multiplicity(x.body(), y.body());
  std::vector<ColoredMultiPattern> operands;
  operands.reserve(x.arity());
  for (std::size_t i = 1; i <= x.arity(); ++i) {
    if (x.input(i) == y.output()) {
      operands.push_back(y);
    } else {
      operands.push_back(colored_unit(m, x.multiplicity(), x.input(i)));
    }
  }
  return full_compose(m, x, operands);
}

}  // namespace musicbox
