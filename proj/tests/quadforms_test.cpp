#include "albert/quadforms.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "test_util.hpp"

namespace albert {
namespace {

const GroundField kQ = GroundField::rationals();
const GroundField kF7 = GroundField::prime(7);
const GroundField kF5 = GroundField::prime(5);

QuadraticForm diag(const GroundField& k, std::vector<std::int64_t> v) {
  std::vector<Scalar> s;
  for (auto x : v) s.push_back(k.from_int(x));
  return QuadraticForm::diagonal(k, s);
}

QuadraticForm random_symmetric(const GroundField& k, std::size_t n, Rng& rng) {
  LinearMap g(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g.at(i, j) = g.at(j, i) = k.random(rng);
  return QuadraticForm(g);
}

LinearMap random_invertible(const GroundField& k, std::size_t n, Rng& rng) {
  for (;;) {
    auto p = LinearMap::random(k, n, rng);
    if (p.rank() == n) return p;
  }
}

// Leibniz expansion; only used on tiny matrices.
Scalar leibniz_det(const LinearMap& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar acc = m.field().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    acc += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

std::vector<JordanElement> all_vectors(const GroundField& k, std::size_t n) {
  const auto p = static_cast<std::int64_t>(k.characteristic());
  std::vector<JordanElement> out;
  std::vector<std::int64_t> c(n, 0);
  for (;;) {
    JordanElement v;
    for (auto x : c) v.coords.push_back(k.from_int(x));
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++c[i] == p) c[i++] = 0;
    if (i == n) return out;
  }
}

// Largest dimension (0, 1 or 2) of a totally isotropic subspace of the
// nondegenerate form q, by enumeration.
std::size_t brute_witt_index(const QuadraticForm& q) {
  std::vector<JordanElement> iso;
  for (auto& v : all_vectors(q.field(), q.dim()))
    if (!v.is_zero() && q.value(v).is_zero()) iso.push_back(v);
  if (iso.empty()) return 0;
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i + 1; j < iso.size(); ++j)
      if (q.bilinear(iso[i], iso[j]).is_zero() &&
          LinearMap::from_columns(q.field(), q.dim(), {iso[i], iso[j]}).rank() == 2)
        return 2;
  return 1;
}

TEST(QuadForms, RejectsNonSymmetric) {
  LinearMap g(kQ, 2, 2);
  g.at(0, 1) = kQ.one();
  EXPECT_THROW(QuadraticForm{g}, InvalidArgument);
  EXPECT_THROW(QuadraticForm(LinearMap(kQ, 2, 3)), InvalidArgument);
}

TEST(QuadForms, DiagonalizeExamples) {
  const auto h = diagonalize(QuadraticForm::hyperbolic(kQ));
  ASSERT_EQ(h.diagonal.size(), 2u);
  EXPECT_EQ(h.diagonal[0], kQ.from_int(2));
  EXPECT_EQ(h.diagonal[1], kQ.from_fraction(-1, 2));

  const auto id = diagonalize(diag(kQ, {1, 1, 1}));
  EXPECT_EQ(id.diagonal, (std::vector<Scalar>{kQ.one(), kQ.one(), kQ.one()}));
  EXPECT_EQ(id.basis, LinearMap::identity(kQ, 3));

  const auto z = diagonalize(QuadraticForm(LinearMap(kQ, 3, 3)));
  for (const auto& x : z.diagonal) EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(witt_invariants(QuadraticForm(LinearMap(kF7, 3, 3))).rank, 0u);
}

TEST(QuadForms, DiagonalizationIsACongruence) {
  Rng rng(1);
  for (const auto& k : {kQ, kF7, testing::big_prime()}) {
    for (int t = 0; t < 20; ++t) {
      const auto q = random_symmetric(k, 1 + rng.below(6), rng);
      const auto d = diagonalize(q);
      EXPECT_EQ(d.basis.rank(), q.dim());
      EXPECT_EQ(q.transformed(d.basis).gram(), QuadraticForm::diagonal(k, d.diagonal).gram());
    }
  }
}

TEST(QuadForms, WittExamplesOverF7) {
  // <1,-1>: the hyperbolic plane; -1 is not a square mod 7.
  const auto h = witt_invariants(diag(kF7, {1, -1}));
  EXPECT_EQ(h.rank, 2u);
  EXPECT_EQ(h.disc, SquareClass::non_square());
  EXPECT_EQ(h.witt_index, 1u);

  const auto a = witt_invariants(diag(kF7, {1, 1}));
  EXPECT_EQ(a.rank, 2u);
  EXPECT_EQ(a.disc, SquareClass::square());
  EXPECT_EQ(a.witt_index, 0u);
  EXPECT_FALSE(isotropic_vector(diag(kF7, {1, 1}), 3).has_value());
  // Legendre symbol (-1/7) by Euler's criterion.
  EXPECT_EQ(kF7.from_int(-1).pow(3), kF7.from_int(-1));

  auto four_h = QuadraticForm::hyperbolic(kF7);
  for (int i = 0; i < 3; ++i) four_h = four_h.orthogonal_sum(QuadraticForm::hyperbolic(kF7));
  const auto w = witt_invariants(four_h);
  EXPECT_EQ(w.rank, 8u);
  EXPECT_EQ(w.disc, SquareClass::square());
  EXPECT_EQ(w.witt_index, 4u);
}

TEST(QuadForms, IsotropicVectorExamples) {
  const auto v = isotropic_vector(QuadraticForm::hyperbolic(kF7), 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, testing::jelem(kF7, {1, 0}));
  EXPECT_THROW(isotropic_vector(QuadraticForm::hyperbolic(kQ), 1), InvalidArgument);

  Rng rng(9);
  for (const auto& k : {kF7, GroundField::prime(1009), testing::big_prime()}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Scalar> d;
      for (int i = 0; i < 8; ++i) d.push_back(k.random_nonzero(rng));
      const auto q = QuadraticForm::diagonal(k, d).transformed(random_invertible(k, 8, rng));
      const auto x = isotropic_vector(q, rng);
      ASSERT_TRUE(x.has_value());
      EXPECT_FALSE(x->is_zero());
      EXPECT_TRUE(q.value(*x).is_zero());
    }
  }
}

TEST(QuadForms, AgreesWithEnumerationOverSmallFields) {
  Rng rng(5);
  for (const auto& k : {kF5, kF7}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng.below(4);
      const auto q = random_symmetric(k, n, rng);
      const Scalar det = leibniz_det(q.gram());
      if (det.is_zero()) continue;
      const auto w = witt_invariants(q, t);
      EXPECT_EQ(w.rank, n);
      EXPECT_EQ(w.disc, square_class(det));
      EXPECT_EQ(w.witt_index, brute_witt_index(q));
      bool iso = false;
      for (const auto& v : all_vectors(k, n)) iso |= !v.is_zero() && q.value(v).is_zero();
      EXPECT_EQ(isotropic_vector(q, t).has_value(), iso);
    }
  }
}

TEST(QuadForms, InvariantUnderChangeOfBasis) {
  Rng rng(12);
  for (const auto& k : {kF7, GroundField::prime(101), GroundField::prime(1009)}) {
    for (int t = 0; t < 5; ++t) {
      const auto q = random_symmetric(k, 2 + rng.below(7), rng);
      const auto base = witt_invariants(q, 1);
      for (int i = 0; i < 20; ++i)
        EXPECT_EQ(witt_invariants(q.transformed(random_invertible(k, q.dim(), rng)), i), base);
      const auto plus_h = witt_invariants(q.orthogonal_sum(QuadraticForm::hyperbolic(k)), 2);
      EXPECT_EQ(plus_h.witt_index, base.witt_index + 1);
      EXPECT_EQ(plus_h.rank, base.rank + 2);
    }
  }
}

TEST(QuadForms, ExtensionFieldResidues) {
  // -1 is a square in F_49, so <1,1> is hyperbolic there.
  const auto f49 = GroundField::extension(7, std::vector<std::uint64_t>{1, 0});
  const auto w = witt_invariants(QuadraticForm::diagonal(f49, {f49.one(), f49.one()}));
  EXPECT_EQ(w.witt_index, 1u);
  EXPECT_EQ(w.disc, SquareClass::square());
}

}  // namespace
}  // namespace albert
