#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albert/linear_map.hpp"
#include "albert/report.hpp"

namespace albert {

// q(x) = x^T G x over a field, with G symmetric. The associated bilinear form
// is x^T G y, so q(x + y) - q(x) - q(y) = 2 x^T G y.
class QuadraticForm {
 public:
  // Throws InvalidArgument when gram is not square and symmetric.
  explicit QuadraticForm(LinearMap gram);

  static QuadraticForm diagonal(const GroundField& k, const std::vector<Scalar>& entries);
  // [[0, 1], [1, 0]]
  static QuadraticForm hyperbolic(const GroundField& k);

  const GroundField& field() const { return gram_.field(); }
  std::size_t dim() const { return gram_.rows(); }
  const LinearMap& gram() const { return gram_; }

  Scalar value(const JordanElement& x) const;
  Scalar bilinear(const JordanElement& x, const JordanElement& y) const;

  // P^T G P: the form in the basis given by the columns of p.
  QuadraticForm transformed(const LinearMap& p) const;
  // The restriction to span(basis).
  QuadraticForm restricted(const std::vector<JordanElement>& basis) const;
  QuadraticForm orthogonal_sum(const QuadraticForm& other) const;

 private:
  LinearMap gram_;
};

struct Diagonalization {
  std::vector<Scalar> diagonal;
  LinearMap basis;  // columns form the new basis; basis^T G basis = diag
};

// Symmetric Gauss reduction. The congruence is replayed before returning.
Diagonalization diagonalize(const QuadraticForm& q);

struct WittInvariants {
  std::size_t rank = 0;
  SquareClass disc = SquareClass::square();  // of the product of nonzero diagonal entries
  std::size_t witt_index = 0;                // of the nondegenerate part

  friend bool operator==(const WittInvariants&, const WittInvariants&) = default;
  json to_json() const;
};

// Finite fields only; throws InvalidArgument over Q.
WittInvariants witt_invariants(const QuadraticForm& q, std::uint64_t seed = 0);

// A nonzero v with q(v) = 0, or nullopt when there is none (possible only for
// a nondegenerate form of rank <= 2). Finite fields only.
std::optional<JordanElement> isotropic_vector(const QuadraticForm& q, Rng& rng);
std::optional<JordanElement> isotropic_vector(const QuadraticForm& q, std::uint64_t seed);

}  // namespace albert
