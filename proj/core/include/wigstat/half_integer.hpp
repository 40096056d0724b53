#pragma once

#include <compare>
#include <cstdlib>

namespace wigstat {

/// Exact representation of an integer or half-integer, stored as twice its value.
/// Used for angular momenta and their projections.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(int value) : twice_(2 * value) {}  // NOLINT: implicit from int is intended

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInteger abs(HalfInteger a) { return from_twice(a.twice_ < 0 ? -a.twice_ : a.twice_); }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  int twice_ = 0;
};

/// Spin quantum number J; valid spins satisfy J >= 1/2.
using Spin = HalfInteger;

/// Hilbert-space dimension 2J+1 of a spin.
constexpr int spin_dim(Spin j) { return j.twice() + 1; }

}  // namespace wigstat
