#pragma once

#include <optional>
#include <vector>

#include "albert/element.hpp"

namespace albert {

// Dense matrix over the ground field acting on coordinate vectors. Square
// maps are what the structure-group code composes and inverts; rectangular
// ones show up as embeddings and constraint systems.
class LinearMap {
 public:
  LinearMap(GroundField k, std::size_t rows, std::size_t cols);

  static LinearMap identity(const GroundField& k, std::size_t n);
  static LinearMap from_columns(const GroundField& k, std::size_t rows,
                                const std::vector<JordanElement>& columns);
  static LinearMap from_rows(const GroundField& k, std::size_t cols,
                             const std::vector<JordanElement>& rows);
  // Uniform entries; may be singular.
  static LinearMap random(const GroundField& k, std::size_t n, Rng& rng);

  const GroundField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  JordanElement column(std::size_t j) const;

  JordanElement apply(const JordanElement& x) const;
  // Composition: (a * b)(x) = a(b(x)).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  LinearMap scaled(const Scalar& c) const;
  LinearMap transpose() const;

  std::size_t rank() const;
  // Throws SingularMap when the map is not invertible.
  LinearMap inverse() const;
  std::optional<LinearMap> try_inverse() const;
  // Basis of {x : A x = 0}, in reduced-echelon order.
  std::vector<JordanElement> kernel_basis() const;
  // Some x with A x = b, if one exists.
  std::optional<JordanElement> solve(const JordanElement& b) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  GroundField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace albert
