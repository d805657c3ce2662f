#include "albert/springer.hpp"

#include <gtest/gtest.h>

#include "albert/discr.hpp"
#include "test_util.hpp"

namespace albert {
namespace {

using testing::big_prime;
using testing::elem;

const GroundField kQ = GroundField::rationals();

struct Fixture {
  TitsModel t;
  EtaleEmbedding emb;
  SpringerData data;
};

Fixture make(const TitsModel& t, SubalgebraSpec spec) {
  auto emb = make_embedding(t, spec);
  auto data = orthogonal_complement(t.model(), emb);
  return {t, std::move(emb), std::move(data)};
}

std::vector<Fixture> fixtures() {
  const auto& p = big_prime();
  SubalgebraSpec companion{SubalgebraKind::Companion, irreducible_cubic(GroundField::prime(101))};
  companion.f = {p.from_int(-2), p.zero(), p.zero()};
  std::vector<Fixture> out;
  out.push_back(make(TitsModel::build(Deg3Algebra::split(kQ), kQ.from_int(2)), {}));
  out.push_back(make(TitsModel::build(testing::t3_minus_2(kQ), kQ.from_int(-3)), {}));
  out.push_back(make(TitsModel::build(Deg3Algebra::split(p), p.from_int(5)), {}));
  out.push_back(make(TitsModel::build(Deg3Algebra::matrix3(p), p.one()),
                     {SubalgebraKind::DiagonalMat3, {}}));
  out.push_back(make(TitsModel::build(Deg3Algebra::matrix3(p), p.from_int(2)), companion));
  return out;
}

JordanElement random_perp(const Fixture& f, Rng& rng) {
  JordanElement x = f.t.model().zero();
  for (const auto& b : f.data.basis_perp) x += f.t.model().field().random(rng) * b;
  return x;
}

TEST(Springer, EmbeddingIsAHomomorphism) {
  for (const auto& f : fixtures())
    for (const auto& c : embedding_checks(f.t.model(), f.emb, 20, 3)) EXPECT_TRUE(c.ok()) << c.name;
}

TEST(Springer, EmbeddingErrors) {
  const auto split = TitsModel::build(Deg3Algebra::split(kQ), kQ.one());
  EXPECT_THROW(make_embedding(split, {SubalgebraKind::DiagonalMat3, {}}), UnsupportedSubalgebra);
  const auto mat = TitsModel::build(Deg3Algebra::matrix3(kQ), kQ.one());
  EXPECT_THROW(make_embedding(mat, {}), UnsupportedSubalgebra);
  // t^3 has zero discriminant.
  EXPECT_THROW(make_embedding(mat, {SubalgebraKind::Companion, {kQ.zero(), kQ.zero(), kQ.zero()}}),
               NotEtale);
}

TEST(Springer, OrthogonalComplement) {
  for (const auto& f : fixtures()) {
    const auto& m = f.t.model();
    const std::size_t n = m.dim();
    EXPECT_EQ(f.data.basis_perp.size(), n - 3);
    EXPECT_EQ(f.data.proj_e + f.data.proj_perp, LinearMap::identity(m.field(), n));
    EXPECT_EQ(f.data.proj_e * f.data.proj_e, f.data.proj_e);
    EXPECT_EQ(f.data.proj_e.apply(m.unit()), m.unit());
    EXPECT_TRUE(f.data.proj_perp.apply(m.unit()).is_zero());
    Rng rng(1);
    for (const auto& w : f.data.basis_perp) {
      const auto a = f.emb.e.random(rng);
      EXPECT_TRUE(m.trace_form(f.emb.embed(a), w).is_zero());
    }
    // The slots a1, a2 are orthogonal to the first slot.
    const auto& A = f.t.algebra();
    const auto x = f.t.pack(A.zero(), A.random(rng), A.random(rng));
    EXPECT_EQ(f.data.proj_perp.apply(x), x);
  }
  EXPECT_EQ(fixtures()[3].data.basis_perp.size(), 24u);
}

TEST(Springer, ModuleAction) {
  for (const auto& f : fixtures()) {
    const auto& m = f.t.model();
    const auto& e = f.emb.e;
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_perp(f, rng);
      const auto a = e.random(rng), b = e.random(rng);
      EXPECT_EQ(e_action(m, f.emb, f.data, e.one(), x), x);
      const auto bx = e_action(m, f.emb, f.data, b, x);
      EXPECT_TRUE(f.data.to_e.apply(bx).is_zero());
      EXPECT_EQ(e_action(m, f.emb, f.data, e.mul(a, b), x), e_action(m, f.emb, f.data, a, bx));
    }
    EXPECT_THROW(e_action(m, f.emb, f.data, e.one(), m.unit()), NotInComplement);
  }
  // First slot: a.(0, a1, a2) = (0, a a1, a a2).
  const auto f = fixtures()[0];
  const auto& e = f.emb.e;
  const auto a = elem(kQ, {2, -1, 3}), a1 = elem(kQ, {1, 4, 0}), a2 = elem(kQ, {-2, 1, 1});
  EXPECT_EQ(e_action(f.t.model(), f.emb, f.data, a, f.t.pack(e.zero(), a1, a2)),
            f.t.pack(e.zero(), e.mul(a, a1), e.mul(a, a2)));
}

TEST(Springer, FormInTitsCoordinates) {
  for (const auto& f : fixtures()) {
    if (f.emb.kind != "first-slot") continue;
    const auto& e = f.emb.e;
    Rng rng(4);
    for (int i = 0; i < 10; ++i) {
      const auto a1 = e.random(rng), a2 = e.random(rng);
      const auto s0 = springer_form(f.t.model(), f.emb, f.data, f.t.pack(e.zero(), a1, e.zero()));
      EXPECT_TRUE(s0.q.is_zero());
      const auto s = springer_form(f.t.model(), f.emb, f.data, f.t.pack(e.zero(), a1, a2));
      EXPECT_EQ(s.q, -e.mul(a1, a2));
      EXPECT_TRUE(f.data.to_e.apply(s.r).is_zero());
    }
  }
}

TEST(Springer, FormIsQuadraticOverE) {
  for (const auto& f : fixtures()) {
    const auto& m = f.t.model();
    const auto& e = f.emb.e;
    Rng rng(6);
    auto q = [&](const JordanElement& x) { return springer_form(m, f.emb, f.data, x).q; };
    for (int i = 0; i < 10; ++i) {
      const auto x = random_perp(f, rng), y = random_perp(f, rng);
      const auto a = e.random(rng);
      const auto ax = e_action(m, f.emb, f.data, a, x);
      EXPECT_EQ(q(ax), e.mul(e.mul(a, a), q(x)));
      const auto bxy = q(x + y) - q(x) - q(y);
      EXPECT_EQ(bxy, q(y + x) - q(y) - q(x));
      EXPECT_EQ(q(ax + y) - q(ax) - q(y), e.mul(a, bxy));
      EXPECT_EQ(q(x + x) - q(x) - q(x), m.field().from_int(2) * q(x));
    }
  }
}

TEST(Springer, PolarizeAndFactorForms) {
  for (const auto& f : fixtures()) {
    const auto& m = f.t.model();
    const auto& e = f.emb.e;
    Rng rng(8);
    const auto g = polarize(m, f.emb, f.data, rng);
    EXPECT_EQ(g.basis.size() * 3, f.data.basis_perp.size());
    for (std::size_t a = 0; a < g.basis.size(); ++a)
      for (std::size_t b = 0; b < g.basis.size(); ++b) EXPECT_EQ(g.gram[a][b], g.gram[b][a]);
    for (int i = 0; i < 5; ++i) {
      std::vector<Deg3Element> c;
      JordanElement x = m.zero();
      for (const auto& w : g.basis) {
        c.push_back(e.random(rng));
        x += e_action(m, f.emb, f.data, c.back(), w);
      }
      Deg3Element expect = e.zero();
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
          expect += e.mul(e.mul(c[a], c[b]), g.gram[a][b]);
      EXPECT_EQ(springer_form(m, f.emb, f.data, x).q, expect);
    }
    if (m.field().kind() != FieldKind::Prime) continue;
    for (const auto& ff : factor_forms(m, f.emb, f.data, g)) {
      JordanElement coords, x = m.zero();
      for (const auto& w : ff.basis) {
        coords.coords.push_back(ff.factor.field.random(rng));
        x += e_action(m, f.emb, f.data, ff.factor.lift(e, coords.coords.back()), w);
      }
      EXPECT_EQ(ff.factor.project(e, springer_form(m, f.emb, f.data, x).q), ff.form.value(coords));
    }
  }
}

TEST(Springer, ConstructiveIsotropicVectors) {
  const auto f = fixtures()[0];  // Tits(split, 2) over Q
  Rng rng(1);
  const auto v = isotropic_invertible(f.t, f.emb, f.data, IsotropicStrategy::Constructive, rng);
  const auto& e = f.emb.e;
  EXPECT_EQ(v, f.t.pack(e.zero(), e.one(), e.zero()));
  EXPECT_TRUE(springer_form(f.t.model(), f.emb, f.data, v).q.is_zero());
  EXPECT_EQ(f.t.model().norm(v), kQ.from_int(2));
  const auto w = f.t.pack(e.zero(), elem(kQ, {1, 2, 3}), e.zero());
  EXPECT_TRUE(springer_form(f.t.model(), f.emb, f.data, w).q.is_zero());
  EXPECT_EQ(f.t.model().norm(w), kQ.from_int(12));
}

TEST(Springer, RandomizedIsotropicVectors) {
  for (const auto& f : fixtures()) {
    if (f.t.model().field().kind() != FieldKind::Prime) continue;
    Rng rng(3);
    for (int i = 0; i < 3; ++i) {
      const auto v = isotropic_invertible(f.t, f.emb, f.data, IsotropicStrategy::Randomized, rng);
      EXPECT_TRUE(springer_form(f.t.model(), f.emb, f.data, v).q.is_zero());
      EXPECT_TRUE(f.t.model().is_invertible(v));
      EXPECT_EQ(f.t.model().u_matrix(v).rank(), static_cast<std::size_t>(f.t.model().dim()));
    }
  }
  const auto q = fixtures()[0];
  Rng rng(1);
  EXPECT_THROW(isotropic_invertible(q.t, q.emb, q.data, IsotropicStrategy::Randomized, rng),
               InvalidArgument);
}

TEST(Springer, EmbeddingOfTheFirstTitsSubalgebra) {
  const auto f = fixtures()[0];
  const auto& m = f.t.model();
  const auto& e = f.emb.e;
  const auto b = elem(kQ, {1, 2, 3});
  const auto v = f.t.pack(e.zero(), b, e.zero());
  const auto s = springer_embedding(m, f.emb, f.data, v);
  // -1 x v = v here, so lambda' = N(v) = lambda N(b).
  EXPECT_EQ(s.lambda_prime, kQ.from_int(12));
  EXPECT_EQ(s.map.rank(), 9u);
  for (const auto& c : springer_embedding_checks(m, s, v, 30, 1)) EXPECT_TRUE(c.ok()) << c.name;

  const auto one = f.t.pack(e.zero(), e.one(), e.zero());
  const auto s1 = springer_embedding(m, f.emb, f.data, one);
  EXPECT_EQ(s1.lambda_prime, kQ.from_int(2));
  Rng rng(5);
  const auto a0 = e.random(rng);
  EXPECT_EQ(s1.map.apply(s1.source.embed_first_slot(a0)), f.t.embed_first_slot(a0));

  EXPECT_THROW(springer_embedding(m, f.emb, f.data, f.t.pack(e.zero(), b, b)), NotIsotropic);
  EXPECT_THROW(springer_embedding(m, f.emb, f.data, f.t.pack(e.zero(), elem(kQ, {0, 1, 1}), e.zero())),
               NotInvertible);
  EXPECT_THROW(springer_embedding(m, f.emb, f.data, m.unit()), NotInComplement);
}

TEST(Springer, EmbeddingForRandomizedVectors) {
  for (const auto& f : fixtures()) {
    if (f.t.model().field().kind() != FieldKind::Prime) continue;
    Rng rng(12);
    const auto v = isotropic_invertible(f.t, f.emb, f.data, IsotropicStrategy::Randomized, rng);
    const auto s = springer_embedding(f.t.model(), f.emb, f.data, v);
    EXPECT_EQ(s.lambda_prime, f.t.model().norm(v));
    for (const auto& c : springer_embedding_checks(f.t.model(), s, v, 10, 2))
      EXPECT_TRUE(c.ok()) << c.name;
  }
}

TEST(Discr, CubicHelpers) {
  for (std::uint64_t p : {7u, 101u, 1009u}) {
    const auto k = GroundField::prime(p);
    const auto f = irreducible_cubic(k);
    const auto g = nonsquare_disc_cubic(k);
    for (std::uint64_t x = 0; x < p; ++x) {
      const Scalar t = k.from_int(static_cast<std::int64_t>(x));
      EXPECT_FALSE((t * t * t + f[2] * t * t + f[1] * t + f[0]).is_zero());
    }
    EXPECT_EQ(square_class(cubic_discriminant(f)), SquareClass::square());
    EXPECT_EQ(square_class(cubic_discriminant(g)), SquareClass::non_square());
  }
}

TEST(Discr, DiagonalOverF7) {
  const auto k = GroundField::prime(7);
  const auto t = TitsModel::build(Deg3Algebra::matrix3(k), k.one());
  const auto checks = lemma_discr_check(t, {SubalgebraKind::DiagonalMat3, {}}, 1);
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) EXPECT_TRUE(c.ok()) << c.name << c.details.dump();
  EXPECT_EQ(checks[1].details["q_E"]["rank"], "8");
  EXPECT_EQ(checks[1].details["q_E"]["disc"], "square");
  EXPECT_EQ(checks[1].details["q_E"]["witt_index"], "4");
}

TEST(Discr, CompanionSubalgebras) {
  const auto k = GroundField::prime(7);
  const auto t = TitsModel::build(Deg3Algebra::matrix3(k), k.from_int(3));
  const auto irr = lemma_discr_check(t, {SubalgebraKind::Companion, irreducible_cubic(k)}, 2);
  EXPECT_EQ(irr.size(), 2u);
  for (const auto& c : irr) EXPECT_TRUE(c.ok()) << c.name << c.details.dump();
  const auto ns = lemma_discr_check(t, {SubalgebraKind::Companion, nonsquare_disc_cubic(k)}, 3);
  EXPECT_EQ(ns.size(), 3u);
  for (const auto& c : ns) EXPECT_TRUE(c.ok()) << c.name << c.details.dump();
  // Over F_7 itself d is a non-square: rank 8, Witt index 3.
  EXPECT_EQ(ns[1].details["q_E"]["witt_index"], "3");
  EXPECT_EQ(ns[1].details["q_E"]["disc"], "nonsquare");
}

TEST(Discr, Preconditions) {
  const auto k = GroundField::prime(7);
  EXPECT_THROW(lemma_discr_check(TitsModel::build(Deg3Algebra::split(k), k.one()), {}, 1),
               NotSplitModel);
  EXPECT_THROW(lemma_discr_check(TitsModel::build(Deg3Algebra::matrix3(kQ), kQ.one()),
                                 {SubalgebraKind::DiagonalMat3, {}}, 1),
               NotSplitModel);
  EXPECT_THROW(lemma_discr_check(TitsModel::build(Deg3Algebra::matrix3(k), k.one()), {}, 1),
               UnsupportedSubalgebra);
}

}  // namespace
}  // namespace albert
