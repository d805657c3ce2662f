#pragma once

#include <array>
#include <string>
#include <vector>

#include "albert/quadforms.hpp"
#include "albert/tits.hpp"

namespace albert {

enum class SubalgebraKind { FirstSlot, DiagonalMat3, Companion };

// Which cubic etale subalgebra of a Tits model to use: the first slot of
// Tits(E, lambda) for commutative E, or, inside Tits(Mat3, lambda), the
// diagonal matrices or the span of powers of a companion matrix C_f placed in
// the first slot.
struct SubalgebraSpec {
  SubalgebraKind kind = SubalgebraKind::FirstSlot;
  std::array<Scalar, 3> f;  // {c0, c1, c2} of t^3 + c2 t^2 + c1 t + c0; Companion only

  std::string describe() const;
};

// A linear injection iota: E -> J, in coordinates a J x 3 matrix.
struct EtaleEmbedding {
  Deg3Algebra e;
  LinearMap iota;
  std::string kind;

  JordanElement embed(const Deg3Element& a) const;
};

// Throws UnsupportedSubalgebra when the spec does not fit the model and
// NotEtale when f has zero discriminant.
EtaleEmbedding make_embedding(const TitsModel& t, const SubalgebraSpec& spec);

// J = iota(E) + E^perp with respect to T(x, y).
struct SpringerData {
  LinearMap gram_e;                         // T(iota e_i, iota e_j)
  LinearMap to_e;                           // 3 x dim: x -> coordinates of proj_E(x) in E
  LinearMap proj_e;                         // dim x dim
  LinearMap proj_perp;                      // dim x dim
  std::vector<JordanElement> basis_perp;    // dim - 3 vectors
};

// Throws DegenerateTrace when T restricted to iota(E) is degenerate.
SpringerData orthogonal_complement(const CubicJordanModel& m, const EtaleEmbedding& emb);

// a.x = -iota(a) x x for x in E^perp. Throws NotInComplement.
JordanElement e_action(const CubicJordanModel& m, const EtaleEmbedding& emb,
                       const SpringerData& data, const Deg3Element& a, const JordanElement& x);

struct SpringerValue {
  Deg3Element q;    // E-component of x^#, read back in E
  JordanElement r;  // E^perp-component of x^#
};
// Throws NotInComplement.
SpringerValue springer_form(const CubicJordanModel& m, const EtaleEmbedding& emb,
                            const SpringerData& data, const JordanElement& x);

// q_E in an E-basis w_1..w_r of E^perp: gram[a][b] = (q(w_a + w_b) - q(w_a) - q(w_b)) / 2,
// so q(sum c_a.w_a) = sum_{a,b} c_a c_b gram[a][b].
struct SpringerGram {
  std::vector<JordanElement> basis;
  std::vector<std::vector<Deg3Element>> gram;
};
// Builds the E-basis greedily from random vectors of E^perp. Throws
// BasisConstructionFailed when E^perp does not come out free over E.
SpringerGram polarize(const CubicJordanModel& m, const EtaleEmbedding& emb,
                      const SpringerData& data, Rng& rng);

// q_E reduced to one residue field K of E (x) F_p: the K-basis is
// epsilon.w_a and the Gram matrix is the projection of the E-valued one.
struct FactorForm {
  ResidueFactor factor;
  std::vector<JordanElement> basis;
  QuadraticForm form;
};
// Prime fields only.
std::vector<FactorForm> factor_forms(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                     const SpringerData& data, const SpringerGram& g);

enum class IsotropicStrategy { Constructive, Randomized };

// Some v in E^perp with q_E(v) = 0 and N(v) != 0, verified before returning.
// Constructive: v = (0, 1, 0) (needs the subalgebra in the first slot).
// Randomized (prime fields): isotropic vectors of each reduced form, glued by
// the idempotents, resampled until N(v) != 0. Throws SearchExhausted after
// max_attempts samples.
JordanElement isotropic_invertible(const TitsModel& t, const EtaleEmbedding& emb,
                                   const SpringerData& data, IsotropicStrategy strategy,
                                   Rng& rng, std::uint64_t max_attempts = 10000);

// The map Tits(E, lambda') -> J,
//   (a0, a1, a2) -> a0 - a1 x v - N(v)^{-1} a2 x v^#,
// with lambda' = N(-1 x v). Throws NotInComplement, NotIsotropic, NotInvertible.
struct SpringerEmbedding {
  Scalar lambda_prime;
  TitsModel source;
  LinearMap map;  // dim(J) x 9
};
SpringerEmbedding springer_embedding(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                     const SpringerData& data, const JordanElement& v);

// Sampled checks that iota is a unital cubic-structure homomorphism.
std::vector<Check> embedding_checks(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                    std::uint64_t samples, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

// Sampled checks that the map of springer_embedding is an injective unital
// homomorphism of cubic structures with v = image of (0, 1, 0).
std::vector<Check> springer_embedding_checks(const CubicJordanModel& m,
                                             const SpringerEmbedding& s,
                                             const JordanElement& v, std::uint64_t samples,
                                             std::uint64_t seed,
                                             Execution exec = Execution::Parallel);

}  // namespace albert
