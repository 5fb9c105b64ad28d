#pragma once

#include <cstdint>
#include <string>

#include "musicbox/errors.hpp"

namespace musicbox {

using Degree = std::int64_t;

// A degree monoid (D, *, e) over a subset of the integers. Three variants:
//
//   additive     D = Z,        a * b = a + b,        e = 0
//   cyclic(k)    D = [0, k-1], a * b = (a + b) % k,  e = 0
//   max(z)       D = [z, inf), a * b = max(a, b),    e = z
//
// Every degree composition in the library is parametrized by one of these.
class DegreeMonoid {
 public:
  enum class Kind { Additive, Cyclic, MaxBounded };

  static DegreeMonoid additive() { return DegreeMonoid(Kind::Additive, 0); }

  static DegreeMonoid cyclic(std::int64_t modulus) {
    if (modulus < 1) {
      throw ArgumentError("cyclic monoid needs modulus >= 1, got " +
                          std::to_string(modulus));
    }
    return DegreeMonoid(Kind::Cyclic, modulus);
  }

  static DegreeMonoid max_bounded(Degree lower_bound) {
    return DegreeMonoid(Kind::MaxBounded, lower_bound);
  }

  Kind kind() const { return kind_; }

  std::int64_t modulus() const { return param_; }

  Degree lower_bound() const { return param_; }

  bool contains(Degree d) const {
    switch (kind_) {
      case Kind::Additive:
        return true;
      case Kind::Cyclic:
        return d >= 0 && d < param_;
      case Kind::MaxBounded:
        return d >= param_;
    }
    return false;
  }

  Degree unit() const {
    switch (kind_) {
      case Kind::Additive:
      case Kind::Cyclic:
        return 0;
      case Kind::MaxBounded:
        return param_;
    }
    return 0;
  }

  Degree combine(Degree a, Degree b) const {
    require_member(a);
    require_member(b);
    switch (kind_) {
      case Kind::Additive: {
        Degree sum = 0;
        if (__builtin_add_overflow(a, b, &sum)) {
          throw CarrierError("degree addition overflows: " + std::to_string(a) +
                             " + " + std::to_string(b));
        }
        return sum;
      }
      case Kind::Cyclic:
        // Both operands are already in [0, k-1], so the sum cannot wrap.
        return (a + b) % param_;
      case Kind::MaxBounded:
        return a > b ? a : b;
    }
    return 0;
  }

  void require_member(Degree d) const {
    if (!contains(d)) {
      throw CarrierError("degree " + std::to_string(d) +
                         " is outside the carrier of " + describe());
    }
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Additive:
        return "additive";
      case Kind::Cyclic:
        return "cyclic " + std::to_string(param_);
      case Kind::MaxBounded:
        return "max " + std::to_string(param_);
    }
    return "?";
  }

  friend bool operator==(const DegreeMonoid& a, const DegreeMonoid& b) {
    return a.kind_ == b.kind_ && (a.kind_ == Kind::Additive || a.param_ == b.param_);
  }
  friend bool operator!=(const DegreeMonoid& a, const DegreeMonoid& b) {
    return !(a == b);
  }

 private:
  DegreeMonoid(Kind kind, std::int64_t param) : kind_(kind), param_(param) {}

  Kind kind_;
  std::int64_t param_;  // modulus for Cyclic, lower bound for MaxBounded
};

}  // namespace musicbox
