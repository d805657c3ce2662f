#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "albert/errors.hpp"
#include "albert/rng.hpp"

namespace albert {

using u128 = unsigned __int128;

enum class FieldKind { Rationals, Prime, Extension };

// Interned description of F_p[s]/(g) for a monic irreducible g of degree 2 or
// 3. Instances live for the whole process so elements can point at them.
struct ExtensionSpec {
  std::uint64_t p;
  int degree;
  std::array<std::uint64_t, 3> modulus;  // g = s^degree + sum modulus[i] s^i
};

class Scalar;

// The active ground field. Cheap to copy; compares by value.
class GroundField {
 public:
  static GroundField rationals();
  // Odd prime p >= 5, p < 2^62.
  static GroundField prime(std::uint64_t p);
  // F_p[s]/(g); `modulus` holds g's low coefficients (g is monic of degree
  // modulus.size(), which must be 2 or 3) and g must be irreducible mod p.
  static GroundField extension(std::uint64_t p,
                               std::span<const std::uint64_t> modulus);
  // "Q" or "Fp:<p>".
  static GroundField parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return ext_ ? ext_->degree : 1; }
  // Number of elements; finite fields only.
  u128 order() const;
  const ExtensionSpec* extension_spec() const { return ext_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  // Accepts "a", "a/b" (any field) and "[c0,c1,...]" (extension fields).
  Scalar parse_element(std::string_view text) const;
  // Uniform over finite fields; over Q a fraction n/d with |n| <= 9 and
  // 1 <= d <= 4, which keeps heights small in degree-7 identities.
  Scalar random(Rng& rng) const;
  Scalar random_nonzero(Rng& rng) const;
  // The class of s in F_p[s]/(g).
  Scalar generator() const;
  // Image of an element of the prime subfield.
  Scalar embed(const Scalar& x) const;

  friend bool operator==(const GroundField& a, const GroundField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.ext_ == b.ext_;
  }

 private:
  friend class Scalar;
  GroundField(FieldKind kind, std::uint64_t p, const ExtensionSpec* ext)
      : kind_(kind), p_(p), ext_(ext) {}

  FieldKind kind_;
  std::uint64_t p_;
  const ExtensionSpec* ext_;
};

// An element of a GroundField in canonical form: a reduced fraction, a
// residue in [0, p), or a reduced polynomial in s. Arithmetic between
// elements of different fields throws FieldMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  struct ExtResidue {
    std::array<std::uint64_t, 3> c;
    const ExtensionSpec* spec;
  };

  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  Scalar(Residue r) : rep_(r) {}
  Scalar(ExtResidue r) : rep_(r) {}

  GroundField field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Canonical forms make this exact structural equality. Elements of
  // different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(u128 e) const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  // Coefficients of the polynomial in s (extension fields) or {v, 0, 0}.
  std::array<std::uint64_t, 3> coefficients() const;

  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class, ExtResidue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Square class of a nonzero element. Over finite fields this is square or
// non-square; over Q it is the square-free integer s with a = s * r^2.
class SquareClass {
 public:
  enum class Kind { Square, NonSquare, Rational };

  static SquareClass square() { return SquareClass(Kind::Square, 1); }
  static SquareClass non_square() { return SquareClass(Kind::NonSquare, 0); }
  static SquareClass rational(mpz_class squarefree) {
    return SquareClass(Kind::Rational, std::move(squarefree));
  }

  Kind kind() const { return kind_; }
  const mpz_class& squarefree_part() const { return squarefree_; }
  bool is_trivial() const {
    return kind_ == Kind::Square || (kind_ == Kind::Rational && squarefree_ == 1);
  }
  // "square", "nonsquare", or the square-free integer.
  std::string to_string() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.kind_ == b.kind_ && a.squarefree_ == b.squarefree_;
  }

 private:
  SquareClass(Kind k, mpz_class s) : kind_(k), squarefree_(std::move(s)) {}
  Kind kind_;
  mpz_class squarefree_;
};

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

// Legendre criterion over finite fields; trial division up to `bound` over Q.
// Throws ZeroInput for a = 0 and FactorizationBoundExceeded when a rational
// numerator or denominator keeps an unresolved cofactor.
SquareClass square_class(const Scalar& a,
                         std::uint64_t bound = kDefaultFactorBound);

// Square root if one exists. Finite fields use Tonelli-Shanks (the rng picks
// the non-residue); over Q only exact rational squares have roots.
std::optional<Scalar> sqrt(const Scalar& a, Rng& rng);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Minimal F_p polynomial toolkit used for extension-field validation and for
// splitting cubic algebras over F_p into residue fields. Polynomials are
// coefficient vectors, low degree first, with no trailing zeros.
namespace modpoly {

using Poly = std::vector<std::uint64_t>;

Poly trim(Poly a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly powmod(const Poly& base, u128 e, const Poly& mod, std::uint64_t p);
// Distinct roots of a squarefree f, sorted ascending.
std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t p, Rng& rng);
// Monic irreducible factors of a squarefree f of degree <= 3, ordered by
// degree then coefficients.
std::vector<Poly> factor_small(const Poly& f, std::uint64_t p, Rng& rng);

}  // namespace modpoly

}  // namespace albert
