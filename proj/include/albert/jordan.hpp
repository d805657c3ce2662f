#pragma once

#include <functional>
#include <string>
#include <vector>

#include "albert/element.hpp"
#include "albert/linear_map.hpp"

namespace albert {

// c * x_i x_j x_k with i <= j <= k.
struct CubicTerm {
  int i, j, k;
  Scalar c;
};

// c * x_i x_j y_l with i <= j: one term of the partial polarization dN(x, y).
struct PolarTerm {
  int i, j, l;
  Scalar c;
};

// c * x_i x_j with i <= j: one term of one output coordinate of x^#.
struct QuadTerm {
  int i, j;
  Scalar c;
};

struct TraceForms {
  Scalar trace;       // T(x)
  Scalar bilinear;    // T(x, y)
};

// m_x(T) = T^3 - c2 T^2 + c1 T - c0.
struct GenericMinPoly {
  Scalar c2, c1, c0;
  Scalar disc;
  bool etale;
};

// A cubic Jordan algebra presented by structure tables: the cubic norm as a
// list of monomials, its partial polarization, and the sharp map as one
// quadratic form per output coordinate. Everything else (cross product,
// traces, U, triple product, inverse) is derived from these three tables.
class CubicJordanModel {
 public:
  using NormFn = std::function<Scalar(const JordanElement&)>;
  using SharpFn = std::function<JordanElement(const JordanElement&)>;

  CubicJordanModel(std::string name, GroundField k, int dim, JordanElement unit,
                   std::vector<CubicTerm> norm, std::vector<std::vector<QuadTerm>> sharp);

  // Reads the tables off closed-form evaluators of N and #. N must be a cubic
  // form and # a quadratic map; coefficients are recovered exactly from
  // values at sums of basis vectors (this divides by 2).
  static CubicJordanModel from_closed_form(std::string name, GroundField k, int dim,
                                           JordanElement unit, const NormFn& norm,
                                           const SharpFn& sharp);

  const std::string& name() const { return name_; }
  const GroundField& field() const { return field_; }
  int dim() const { return dim_; }
  const JordanElement& unit() const { return unit_; }
  const std::vector<CubicTerm>& norm_table() const { return norm_; }
  const std::vector<PolarTerm>& polar_table() const { return polar_; }
  const std::vector<std::vector<QuadTerm>>& sharp_table() const { return sharp_; }

  // Copy with sharp coefficient (output, i, j) shifted by delta (the entry is
  // created when absent). Used to build deliberately broken models.
  CubicJordanModel with_sharp_perturbation(int output, int i, int j, const Scalar& delta) const;

  JordanElement zero() const { return JordanElement::zeros(field_, dim_); }
  JordanElement basis(int i) const;
  JordanElement random(Rng& rng) const;
  JordanElement random_invertible(Rng& rng) const;

  Scalar norm(const JordanElement& x) const;
  // dN(x, y): quadratic in x, linear in y.
  Scalar dnorm(const JordanElement& x, const JordanElement& y) const;
  JordanElement sharp(const JordanElement& x) const;
  // (x + y)^# - x^# - y^#
  JordanElement cross(const JordanElement& x, const JordanElement& y) const;

  Scalar trace(const JordanElement& x) const;
  // N(1, x, y) = dN(1 + x, y) - dN(1, y) - dN(x, y)
  Scalar norm_1xy(const JordanElement& x, const JordanElement& y) const;
  Scalar trace_form(const JordanElement& x, const JordanElement& y) const;
  TraceForms trace_forms(const JordanElement& x, const JordanElement& y) const;

  // U_x y = T(x, y) x - x^# x y
  JordanElement u_op(const JordanElement& x, const JordanElement& y) const;
  // U_x as a dim x dim matrix, built column by column.
  LinearMap u_matrix(const JordanElement& x) const;
  // {x, y, z} = U_{x+z} y - U_x y - U_z y
  JordanElement triple(const JordanElement& x, const JordanElement& y,
                       const JordanElement& z) const;

  // N(x)^{-1} x^#; throws NotInvertible when N(x) = 0.
  JordanElement inverse(const JordanElement& x) const;
  bool is_invertible(const JordanElement& x) const { return !norm(x).is_zero(); }

  JordanElement square(const JordanElement& x) const { return u_op(x, unit_); }  // U_x 1
  JordanElement cube(const JordanElement& x) const { return u_op(x, x); }        // U_x x
  GenericMinPoly generic_min_poly(const JordanElement& x) const;
  // x^3 - c2 x^2 + c1 x - c0 1, which vanishes identically.
  JordanElement min_poly_residual(const JordanElement& x) const;

 private:
  void check(const JordanElement& x) const;
  void build_polar();

  std::string name_;
  GroundField field_;
  int dim_;
  JordanElement unit_;
  std::vector<CubicTerm> norm_;
  std::vector<PolarTerm> polar_;
  std::vector<std::vector<QuadTerm>> sharp_;
};

}  // namespace albert
