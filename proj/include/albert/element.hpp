#pragma once

#include <string>
#include <vector>

#include "albert/scalars.hpp"

namespace albert {

// Coordinate vector of an element of a cubic Jordan model (or of any space a
// LinearMap acts on). For Tits models the coordinates are the three slots
// a0, a1, a2 laid out one after the other.
struct JordanElement {
  std::vector<Scalar> coords;

  static JordanElement zeros(const GroundField& k, std::size_t n) {
    return JordanElement{std::vector<Scalar>(n, k.zero())};
  }

  std::size_t size() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }

  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
  friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
  JordanElement operator-() const;
  friend JordanElement operator*(const Scalar& c, JordanElement a) {
    for (auto& x : a.coords) x *= c;
    return a;
  }
  friend bool operator==(const JordanElement& a, const JordanElement& b) = default;

  bool is_zero() const;
  std::vector<std::string> render() const;
  std::string to_string() const;
};

}  // namespace albert
