#include "albert/deg3.hpp"

#include <gtest/gtest.h>

namespace albert {
namespace {

const GroundField kQ = GroundField::rationals();
const GroundField kF7 = GroundField::prime(7);
const GroundField kBig = GroundField::prime(2147483647);

Deg3Element elem(const GroundField& k, std::vector<std::int64_t> v) {
  Deg3Element e;
  for (auto x : v) e.coords.push_back(k.from_int(x));
  return e;
}

Deg3Algebra t3_minus_2(const GroundField& k) {
  return Deg3Algebra::cubic(k, {k.from_int(-2), k.zero(), k.zero()});
}

std::vector<Deg3Algebra> all_algebras() {
  std::vector<Deg3Algebra> out;
  for (const auto& k : {kQ, kBig}) {
    out.push_back(Deg3Algebra::split(k));
    out.push_back(t3_minus_2(k));
    out.push_back(Deg3Algebra::cubic(k, {k.from_int(1), k.from_int(-3), k.from_int(2)}));
    out.push_back(Deg3Algebra::matrix3(k));
  }
  return out;
}

TEST(Deg3, MultiplicationExamples) {
  const auto split = Deg3Algebra::split(kQ);
  EXPECT_EQ(split.mul(elem(kQ, {2, 3, 5}), split.one()), elem(kQ, {2, 3, 5}));
  const auto m3 = Deg3Algebra::matrix3(kQ);
  EXPECT_EQ(m3.mul(m3.one(), m3.one()), m3.one());
  // t * t^2 = t^3 = 2 in Q[t]/(t^3 - 2)
  const auto c = t3_minus_2(kQ);
  EXPECT_EQ(c.mul(c.basis(1), c.basis(2)), elem(kQ, {2, 0, 0}));
}

TEST(Deg3, NormTraceSharpExamples) {
  const auto split = Deg3Algebra::split(kQ);
  const auto nts = split.norm_trace_sharp(elem(kQ, {2, 3, 5}));
  EXPECT_EQ(nts.norm, kQ.from_int(30));
  EXPECT_EQ(nts.trace, kQ.from_int(10));
  // Adjugate of diag(2,3,5) is diag(3*5, 2*5, 2*3).
  EXPECT_EQ(nts.sharp, elem(kQ, {15, 10, 6}));

  const auto m3 = Deg3Algebra::matrix3(kQ);
  const auto id = m3.norm_trace_sharp(m3.one());
  EXPECT_TRUE(id.norm.is_one());
  EXPECT_EQ(id.trace, kQ.from_int(3));
  EXPECT_EQ(id.sharp, m3.one());
}

TEST(Deg3, CubicQuotientNormOfGenerator) {
  // N(t) in Q[t]/(t^3 - 2) is the determinant of the companion matrix: 2.
  const auto c = t3_minus_2(kQ);
  EXPECT_EQ(c.norm(c.basis(1)), kQ.from_int(2));
  EXPECT_EQ(c.trace(c.basis(1)), kQ.zero());
  EXPECT_EQ(c.trace(c.one()), kQ.from_int(3));
}

TEST(Deg3, AdjugateIdentityAndMultiplicativity) {
  for (const auto& a : all_algebras()) {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
      const auto x = a.random(rng), y = a.random(rng);
      const auto nts = a.norm_trace_sharp(x);
      EXPECT_EQ(a.mul(x, nts.sharp), nts.norm * a.one()) << a.describe();
      EXPECT_EQ(a.mul(nts.sharp, x), nts.norm * a.one()) << a.describe();
      EXPECT_EQ(a.norm(a.mul(x, y)), a.norm(x) * a.norm(y)) << a.describe();
      EXPECT_EQ(a.trace(a.mul(x, y)), a.trace(a.mul(y, x))) << a.describe();
      EXPECT_EQ(a.sharp(a.sharp(x)), a.norm(x) * x) << a.describe();
      EXPECT_EQ(nts.norm, a.norm(x));
      EXPECT_EQ(nts.trace, a.trace(x));
      EXPECT_EQ(nts.sharp, a.sharp(x));
    }
  }
}

TEST(Deg3, AssociativeMultiplication) {
  for (const auto& a : all_algebras()) {
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
      const auto x = a.random(rng), y = a.random(rng), z = a.random(rng);
      EXPECT_EQ(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z))) << a.describe();
    }
  }
}

TEST(Deg3, MatrixEmbeddingCommutesWithNormTraceSharp) {
  const auto m3 = Deg3Algebra::matrix3(kBig);
  for (const auto& e : {Deg3Algebra::split(kBig), t3_minus_2(kBig)}) {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      const auto x = e.random(rng), y = e.random(rng);
      const auto mx = e.to_matrix3(x);
      EXPECT_EQ(m3.norm(mx), e.norm(x));
      EXPECT_EQ(m3.trace(mx), e.trace(x));
      EXPECT_EQ(m3.sharp(mx), e.to_matrix3(e.sharp(x)));
      EXPECT_EQ(m3.mul(mx, e.to_matrix3(y)), e.to_matrix3(e.mul(x, y)));
    }
    EXPECT_EQ(e.to_matrix3(e.one()), m3.one());
  }
}

TEST(Deg3, InverseAndErrors) {
  const auto split = Deg3Algebra::split(kQ);
  EXPECT_EQ(split.inverse(elem(kQ, {2, 3, 5})),
            (Deg3Element{{kQ.parse_element("1/2"), kQ.parse_element("1/3"), kQ.parse_element("1/5")}}));
  EXPECT_THROW(split.inverse(elem(kQ, {0, 1, 1})), NotInvertible);
  EXPECT_THROW(split.mul(elem(kQ, {1, 2, 3}), elem(kQ, {1, 2})), AlgebraMismatch);
  EXPECT_THROW(split.mul(elem(kQ, {1, 2, 3}), elem(kF7, {1, 2, 3})), AlgebraMismatch);
}

// disc of a monic cubic with roots r1, r2, r3 is prod_{i<j} (ri - rj)^2.
TEST(Deg3, DiscriminantMatchesRootProduct) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t r1 = rng.between(-20, 20), r2 = rng.between(-20, 20), r3 = rng.between(-20, 20);
    const std::int64_t c2 = -(r1 + r2 + r3);
    const std::int64_t c1 = r1 * r2 + r1 * r3 + r2 * r3;
    const std::int64_t c0 = -(r1 * r2 * r3);
    const std::int64_t root_product = (r1 - r2) * (r1 - r3) * (r2 - r3);
    EXPECT_EQ(cubic_discriminant({kQ.from_int(c0), kQ.from_int(c1), kQ.from_int(c2)}),
              kQ.from_int(root_product * root_product));
  }
}

TEST(Deg3, DiscriminantAlgebra) {
  const auto d_split = discriminant_algebra(Deg3Algebra::split(kQ));
  EXPECT_TRUE(d_split.d.is_one());
  EXPECT_TRUE(d_split.split);
  EXPECT_EQ(d_split.norm_form()[1], -kQ.one());

  const auto d = discriminant_algebra(t3_minus_2(kQ));
  EXPECT_EQ(d.d, kQ.from_int(-108));
  EXPECT_EQ(square_class(d.d).to_string(), "-3");
  EXPECT_FALSE(d.split);

  EXPECT_THROW(Deg3Algebra::cubic(kQ, {kQ.zero(), kQ.zero(), kQ.zero()}), NotEtale);
  // (t-1)^2 (t+2) = t^3 - 3t + 2
  EXPECT_THROW(Deg3Algebra::cubic(kQ, {kQ.from_int(2), kQ.from_int(-3), kQ.zero()}), NotEtale);
  EXPECT_THROW(discriminant_algebra(Deg3Algebra::matrix3(kQ)), NotCommutative);
}

void check_factors(const Deg3Algebra& e, std::vector<int> expected_degrees) {
  const auto factors = residue_factors(e);
  ASSERT_EQ(factors.size(), expected_degrees.size());
  Deg3Element sum = e.zero();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    EXPECT_EQ(factors[i].field.degree(), expected_degrees[i]);
    sum += factors[i].idempotent;
    EXPECT_EQ(e.mul(factors[i].idempotent, factors[i].idempotent), factors[i].idempotent);
  }
  EXPECT_EQ(sum, e.one());
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = e.random(rng), b = e.random(rng);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      EXPECT_EQ(f.project(e, e.mul(a, b)), f.project(e, a) * f.project(e, b));
      EXPECT_EQ(f.project(e, a + b), f.project(e, a) + f.project(e, b));
      const Scalar c = f.field.random(rng);
      const auto lifted = f.lift(e, c);
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (i == j)
          EXPECT_EQ(factors[j].project(e, lifted), c);
        else
          EXPECT_TRUE(factors[j].project(e, lifted).is_zero());
      }
    }
  }
}

TEST(Deg3, ResidueFactors) {
  check_factors(Deg3Algebra::split(kF7), {1, 1, 1});
  check_factors(t3_minus_2(kF7), {3});
  // (t - 1)(t^2 + 1) = t^3 - t^2 + t - 1
  check_factors(Deg3Algebra::cubic(kF7, {kF7.from_int(-1), kF7.from_int(1), kF7.from_int(-1)}), {1, 2});
  // (t - 1)(t - 2)(t - 4)
  check_factors(Deg3Algebra::cubic(kF7, {kF7.from_int(-8), kF7.from_int(14), kF7.from_int(-7)}), {1, 1, 1});
  EXPECT_THROW(residue_factors(Deg3Algebra::split(kQ)), InvalidArgument);
}

}  // namespace
}  // namespace albert
