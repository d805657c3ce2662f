#pragma once

#include <functional>
#include <vector>

#include "albert/jordan.hpp"
#include "albert/report.hpp"
#include "albert/trials.hpp"

namespace albert {

// What the quadratic axioms need to know about an algebra: its unit and its
// U-operator, pointwise and as a matrix. Cubic models and their isotopes both
// provide one.
struct QuadraticJordanView {
  GroundField field;
  int dim;
  JordanElement unit;
  std::function<JordanElement(const JordanElement&, const JordanElement&)> u;
  std::function<LinearMap(const JordanElement&)> u_matrix;

  JordanElement triple(const JordanElement& x, const JordanElement& y,
                       const JordanElement& z) const {
    return u(x + z, y) - u(x, y) - u(z, y);
  }
  JordanElement random(Rng& rng) const;
};

QuadraticJordanView quadratic_view(const CubicJordanModel& model);

// The three unital quadratic Jordan axioms:
//   U_1 = id,  {x, y, U_x z} = U_x {y, x, z},  U_{U_x y} = U_x U_y U_x
// (the last one applied to a sampled z).
std::vector<Check> quadratic_axioms(const QuadraticJordanView& view, std::uint64_t trials,
                                    std::uint64_t seed, Execution exec = Execution::Parallel);

// Cubic-map and cubic-Jordan axioms on the structure tables, plus degree
// homogeneity of # and dN and symmetry of T(x, y).
std::vector<Check> cubic_axioms(const CubicJordanModel& model, std::uint64_t trials,
                                std::uint64_t seed, Execution exec = Execution::Parallel);

// Both suites. trials must be at least 1.
Report axiom_suite(const CubicJordanModel& model, std::uint64_t trials, std::uint64_t seed,
                   Execution exec = Execution::Parallel);

}  // namespace albert
