#pragma once

#include <array>
#include <string>
#include <vector>

#include "albert/scalars.hpp"

namespace albert {

// Coordinates of an element of a degree-3 associative algebra in the
// algebra's distinguished basis: e_0..e_2 (split), 1, t, t^2 (cubic
// quotient), or the nine matrix units in row-major order (matrices).
struct Deg3Element {
  std::vector<Scalar> coords;

  std::size_t size() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }

  Deg3Element& operator+=(const Deg3Element& o);
  Deg3Element& operator-=(const Deg3Element& o);
  friend Deg3Element operator+(Deg3Element a, const Deg3Element& b) { return a += b; }
  friend Deg3Element operator-(Deg3Element a, const Deg3Element& b) { return a -= b; }
  Deg3Element operator-() const;
  friend Deg3Element operator*(const Scalar& c, Deg3Element a);
  friend bool operator==(const Deg3Element& a, const Deg3Element& b) = default;

  bool is_zero() const;
  std::string to_string() const;
};

enum class Deg3Kind { SplitEtale, CubicQuotient, Matrix3 };

struct NormTraceSharp {
  Scalar norm;
  Scalar trace;
  Deg3Element sharp;
};

// The quadratic etale algebra k[s]/(s^2 - d), carried by its square class.
struct QuadraticEtale {
  Scalar d;
  bool split;
  // Diagonal coefficients of the norm form x^2 - d y^2.
  std::array<Scalar, 2> norm_form() const { return {d.field().one(), -d}; }
};

// One residue field K_i of E (x) F_p together with the projection E -> K_i
// and its section K_i -> E (CRT lift, zero on the other factors).
class Deg3Algebra;
struct ResidueFactor {
  GroundField field;            // F_p or F_p[s]/(g)
  modpoly::Poly modulus;        // g, monic; {-r, 1} for a rational root r
  Deg3Element idempotent;       // the primitive idempotent of this factor

  Scalar project(const Deg3Algebra& e, const Deg3Element& a) const;
  Deg3Element lift(const Deg3Algebra& e, const Scalar& c) const;
};

class Deg3Algebra {
 public:
  static Deg3Algebra split(GroundField k);
  // k[t]/(t^3 + c2 t^2 + c1 t + c0) with low = {c0, c1, c2}. Throws NotEtale
  // when the cubic has zero discriminant.
  static Deg3Algebra cubic(GroundField k, std::array<Scalar, 3> low);
  static Deg3Algebra matrix3(GroundField k);

  Deg3Kind kind() const { return kind_; }
  const GroundField& field() const { return field_; }
  int dim() const { return kind_ == Deg3Kind::Matrix3 ? 9 : 3; }
  bool is_commutative() const { return kind_ != Deg3Kind::Matrix3; }
  // {c0, c1, c2} of the defining cubic; CubicQuotient only.
  const std::array<Scalar, 3>& cubic_coefficients() const;
  std::string describe() const;

  Deg3Element zero() const;
  Deg3Element one() const;
  Deg3Element basis(int i) const;
  Deg3Element random(Rng& rng) const;
  Deg3Element random_invertible(Rng& rng) const;

  Deg3Element mul(const Deg3Element& a, const Deg3Element& b) const;
  Scalar norm(const Deg3Element& a) const;
  Scalar trace(const Deg3Element& a) const;
  Deg3Element sharp(const Deg3Element& a) const;
  NormTraceSharp norm_trace_sharp(const Deg3Element& a) const;
  // N(a)^{-1} a^#; throws NotInvertible when N(a) = 0.
  Deg3Element inverse(const Deg3Element& a) const;

  // Left multiplication by a as a row-major 3x3 matrix (commutative kinds).
  std::array<Scalar, 9> regular_representation(const Deg3Element& a) const;

  // Image in 3x3 matrices: diagonal for SplitEtale, a(C_f) with C_f the
  // companion matrix for CubicQuotient, identity for Matrix3.
  Deg3Element to_matrix3(const Deg3Element& a) const;

  friend bool operator==(const Deg3Algebra& a, const Deg3Algebra& b) {
    return a.kind_ == b.kind_ && a.field_ == b.field_ && a.low_ == b.low_;
  }

 private:
  Deg3Algebra(Deg3Kind kind, GroundField k, std::array<Scalar, 3> low)
      : kind_(kind), field_(k), low_(std::move(low)) {}
  void check(const Deg3Element& a) const;

  Deg3Kind kind_;
  GroundField field_;
  std::array<Scalar, 3> low_;
};

// Discriminant of the monic cubic t^3 + c2 t^2 + c1 t + c0.
Scalar cubic_discriminant(const std::array<Scalar, 3>& low);

// delta(E) for commutative E. Throws NotCommutative for Matrix3.
QuadraticEtale discriminant_algebra(const Deg3Algebra& e);

// Residue fields of E (x) F_p for commutative E over a prime field, ordered
// by degree then modulus. Throws InvalidArgument over Q.
std::vector<ResidueFactor> residue_factors(const Deg3Algebra& e);

// 3x3 helpers on row-major coordinate arrays.
namespace mat3 {
Deg3Element mul(const Deg3Element& a, const Deg3Element& b);
Scalar det(const Deg3Element& a);
Deg3Element adjugate(const Deg3Element& a);
}  // namespace mat3

}  // namespace albert
