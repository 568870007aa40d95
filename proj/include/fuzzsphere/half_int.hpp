#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace fuzzsphere {

/// Spin or magnetic label stored as twice its value, so j = 3/2 is twice = 3.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return 0.5 * twice; }
  /// Integer value; only meaningful when is_integer().
  constexpr int as_int() const { return twice / 2; }

  constexpr HalfInt operator-() const { return HalfInt(-twice); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice += o.twice;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice -= o.twice;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
  }
};

constexpr HalfInt abs(HalfInt h) { return HalfInt(h.twice < 0 ? -h.twice : h.twice); }

/// True when a and b differ by an integer.
constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.twice - b.twice) % 2) == 0; }

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace fuzzsphere
