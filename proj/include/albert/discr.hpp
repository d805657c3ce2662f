#pragma once

#include <array>

#include "albert/springer.hpp"

namespace albert {

// Compares q_E with <1, -d> (+) h (+) h (+) h, d = disc(E), over every residue
// field K of E (x) F_p: rank, discriminant and Witt index of both sides are
// computed independently by witt_invariants. Needs J = Tits(Mat3, lambda)
// over a prime field (NotSplitModel otherwise) and a diagonal or companion
// subalgebra (UnsupportedSubalgebra otherwise). One check per factor plus the
// E-rank of the Springer form.
std::vector<Check> lemma_discr_check(const TitsModel& t, const SubalgebraSpec& spec,
                                     std::uint64_t seed);

// {c0, c1, c2} of a monic irreducible cubic over F_p (its discriminant is
// always a square).
std::array<Scalar, 3> irreducible_cubic(const GroundField& k);
// {c0, c1, c2} of (t - 1)(t^2 - n) with n a non-square: etale with
// non-square discriminant.
std::array<Scalar, 3> nonsquare_disc_cubic(const GroundField& k);

}  // namespace albert
