#pragma once

#include <array>

#include "albert/deg3.hpp"
#include "albert/isotopy.hpp"
#include "albert/jordan.hpp"

namespace albert {

// First Tits construction J = A + A + A with parameter lambda. Coordinates of
// x = (a0, a1, a2) are the coordinates of a0, then a1, then a2.
class TitsModel {
 public:
  // Throws ZeroLambda when lambda = 0, FieldMismatch when lambda is not in k.
  static TitsModel build(const Deg3Algebra& a, const Scalar& lambda);

  const Deg3Algebra& algebra() const { return a_; }
  const Scalar& lambda() const { return lambda_; }
  const CubicJordanModel& model() const { return model_; }

  JordanElement pack(const Deg3Element& a0, const Deg3Element& a1, const Deg3Element& a2) const;
  std::array<Deg3Element, 3> unpack(const JordanElement& x) const;
  // a -> (a, 0, 0). Throws AlgebraMismatch for an element of another algebra.
  JordanElement embed_first_slot(const Deg3Element& a) const;

  // The defining formulas evaluated directly, bypassing the tables:
  //   N = N(a0) + lambda N(a1) + lambda^{-1} N(a2) - T(a0 a1 a2)
  //   # = (a0^# - a1 a2, lambda^{-1} a2^# - a0 a1, lambda a1^# - a2 a0)
  Scalar closed_norm(const JordanElement& x) const;
  JordanElement closed_sharp(const JordanElement& x) const;

 private:
  TitsModel(Deg3Algebra a, Scalar lambda, CubicJordanModel m)
      : a_(std::move(a)), lambda_(std::move(lambda)), model_(std::move(m)) {}

  Deg3Algebra a_;
  Scalar lambda_;
  CubicJordanModel model_;
};

struct TransMove {
  StructureWord word;             // [U_(0,0,1), U_(0,y,0)]
  JordanElement image;            // word applied to (y, 0, 0)
  Scalar norm;                    // N_E(y)
  StructureWord normalized_word;  // [Scalar(N(y)^{-1}), U_(0,0,1), U_(0,y,0)]
  JordanElement normalized_image;
};

// Moves (y, 0, 0) onto N(y) 1 with two U-operators, then onto 1 with a scalar.
// Throws NotCommutative when A is not commutative and NotInvertible when
// N(y) = 0.
TransMove lemma_trans_move(const TitsModel& t, const Deg3Element& y);

}  // namespace albert
