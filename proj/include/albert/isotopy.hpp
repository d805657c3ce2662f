#pragma once

#include <variant>
#include <vector>

#include "albert/axioms.hpp"

namespace albert {

// J^(v): unit v^{-1}, U'_x = U_x U_v. Throws NotInvertible when N(v) = 0.
// The view keeps a reference to `model`, which must outlive it.
QuadraticJordanView isotope(const CubicJordanModel& model, const JordanElement& v);

struct ScalarLetter {
  Scalar c;
};
struct ULetter {
  JordanElement x;
};
using WordLetter = std::variant<ScalarLetter, ULetter>;

// A product of generators of the structure group: nonzero scalars and U_x
// for invertible x. The first letter is applied last.
struct StructureWord {
  std::vector<WordLetter> letters;

  json to_json() const;
  // [{"scalar":"c"} | {"u":["x0",...]}]; throws InvalidArgument on bad shape.
  static StructureWord from_json(const json& j, const GroundField& k);
};

// Throws NotInvertible for a zero scalar or a non-invertible U letter.
LinearMap letter_map(const CubicJordanModel& model, const WordLetter& letter);
LinearMap eval_word(const CubicJordanModel& model, const StructureWord& word);

// Samples x and compares U_{g(x)} with g U_x g^{-1} U_{g(1)} as matrices.
// Throws SingularMap when g is not invertible.
Check autotopy_check(const CubicJordanModel& model, const LinearMap& g, std::uint64_t samples,
                     std::uint64_t seed, Execution exec = Execution::Parallel);
bool is_autotopy(const CubicJordanModel& model, const LinearMap& g, std::uint64_t samples = 32,
                 std::uint64_t seed = 0, Execution exec = Execution::Parallel);

}  // namespace albert
