#include "albert/deg3.hpp"

#include <algorithm>

namespace albert {

// ---------------------------------------------------------------------------
// Deg3Element

Deg3Element& Deg3Element::operator+=(const Deg3Element& o) {
  if (size() != o.size()) throw AlgebraMismatch("element dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Deg3Element& Deg3Element::operator-=(const Deg3Element& o) {
  if (size() != o.size()) throw AlgebraMismatch("element dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Deg3Element Deg3Element::operator-() const {
  Deg3Element r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Deg3Element operator*(const Scalar& c, Deg3Element a) {
  for (auto& x : a.coords) x *= c;
  return a;
}

bool Deg3Element::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::string Deg3Element::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += coords[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// 3x3 matrices

namespace mat3 {

Deg3Element mul(const Deg3Element& a, const Deg3Element& b) {
  const Scalar zero = a[0].field().zero();
  Deg3Element c{std::vector<Scalar>(9, zero)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar acc = zero;
      for (int k = 0; k < 3; ++k) acc += a[3 * i + k] * b[3 * k + j];
      c[3 * i + j] = acc;
    }
  return c;
}

Scalar det(const Deg3Element& a) {
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Deg3Element adjugate(const Deg3Element& a) {
  // adj(a)_{ij} = cofactor_{ji}
  auto m = [&](int r, int c) -> const Scalar& { return a[3 * r + c]; };
  Deg3Element r{std::vector<Scalar>(9)};
  r[0] = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  r[1] = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  r[2] = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  r[3] = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  r[4] = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  r[5] = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  r[6] = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  r[7] = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  r[8] = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return r;
}

}  // namespace mat3

// ---------------------------------------------------------------------------
// Deg3Algebra

Scalar cubic_discriminant(const std::array<Scalar, 3>& low) {
  const Scalar& c0 = low[0];
  const Scalar& c1 = low[1];
  const Scalar& c2 = low[2];
  const GroundField k = c0.field();
  return k.from_int(18) * c2 * c1 * c0 - k.from_int(4) * c2 * c2 * c2 * c0 +
         c2 * c2 * c1 * c1 - k.from_int(4) * c1 * c1 * c1 - k.from_int(27) * c0 * c0;
}

Deg3Algebra Deg3Algebra::split(GroundField k) {
  return Deg3Algebra(Deg3Kind::SplitEtale, k, {k.zero(), k.zero(), k.zero()});
}

Deg3Algebra Deg3Algebra::cubic(GroundField k, std::array<Scalar, 3> low) {
  for (const auto& c : low)
    if (!(c.field() == k)) throw FieldMismatch("cubic coefficients live in another field");
  if (cubic_discriminant(low).is_zero())
    throw NotEtale("defining cubic has zero discriminant");
  return Deg3Algebra(Deg3Kind::CubicQuotient, k, std::move(low));
}

Deg3Algebra Deg3Algebra::matrix3(GroundField k) {
  return Deg3Algebra(Deg3Kind::Matrix3, k, {k.zero(), k.zero(), k.zero()});
}

const std::array<Scalar, 3>& Deg3Algebra::cubic_coefficients() const {
  if (kind_ != Deg3Kind::CubicQuotient) throw InvalidArgument("not a cubic quotient");
  return low_;
}

std::string Deg3Algebra::describe() const {
  switch (kind_) {
    case Deg3Kind::SplitEtale:
      return "split";
    case Deg3Kind::Matrix3:
      return "mat3";
    case Deg3Kind::CubicQuotient:
      return "cubic[" + low_[0].to_string() + "," + low_[1].to_string() + "," +
             low_[2].to_string() + "]";
  }
  return "?";
}

void Deg3Algebra::check(const Deg3Element& a) const {
  if (static_cast<int>(a.size()) != dim())
    throw AlgebraMismatch("element of dimension " + std::to_string(a.size()) +
                          " used in " + describe());
  if (!(a[0].field() == field_)) throw AlgebraMismatch("element over another field");
}

Deg3Element Deg3Algebra::zero() const {
  return Deg3Element{std::vector<Scalar>(dim(), field_.zero())};
}

Deg3Element Deg3Algebra::one() const {
  Deg3Element r = zero();
  switch (kind_) {
    case Deg3Kind::SplitEtale:
      r[0] = r[1] = r[2] = field_.one();
      break;
    case Deg3Kind::CubicQuotient:
      r[0] = field_.one();
      break;
    case Deg3Kind::Matrix3:
      r[0] = r[4] = r[8] = field_.one();
      break;
  }
  return r;
}

Deg3Element Deg3Algebra::basis(int i) const {
  Deg3Element r = zero();
  r[i] = field_.one();
  return r;
}

Deg3Element Deg3Algebra::random(Rng& rng) const {
  Deg3Element r = zero();
  for (auto& c : r.coords) c = field_.random(rng);
  return r;
}

Deg3Element Deg3Algebra::random_invertible(Rng& rng) const {
  for (;;) {
    Deg3Element r = random(rng);
    if (!norm(r).is_zero()) return r;
  }
}

Deg3Element Deg3Algebra::mul(const Deg3Element& a, const Deg3Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case Deg3Kind::SplitEtale:
      return Deg3Element{{a[0] * b[0], a[1] * b[1], a[2] * b[2]}};
    case Deg3Kind::Matrix3:
      return mat3::mul(a, b);
    case Deg3Kind::CubicQuotient: {
      std::array<Scalar, 5> p;
      p.fill(field_.zero());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
      // t^3 = -(c0 + c1 t + c2 t^2)
      for (int d = 4; d >= 3; --d) {
        const Scalar top = p[d];
        p[d] = field_.zero();
        for (int i = 0; i < 3; ++i) p[d - 3 + i] -= top * low_[i];
      }
      return Deg3Element{{p[0], p[1], p[2]}};
    }
  }
  throw AlgebraMismatch("unknown algebra kind");
}

std::array<Scalar, 9> Deg3Algebra::regular_representation(const Deg3Element& a) const {
  if (!is_commutative()) throw NotCommutative("regular representation of mat3 not provided");
  std::array<Scalar, 9> m;
  for (int j = 0; j < 3; ++j) {
    const Deg3Element col = mul(a, basis(j));
    for (int i = 0; i < 3; ++i) m[3 * i + j] = col[i];
  }
  return m;
}

NormTraceSharp Deg3Algebra::norm_trace_sharp(const Deg3Element& a) const {
  check(a);
  if (kind_ == Deg3Kind::Matrix3)
    return {mat3::det(a), a[0] + a[4] + a[8], mat3::adjugate(a)};
  const auto m = regular_representation(a);
  const Deg3Element rep{{m.begin(), m.end()}};
  const Scalar n = mat3::det(rep);
  const Scalar t = m[0] + m[4] + m[8];
  // Middle characteristic coefficient: sum of the principal 2x2 minors.
  const Scalar sigma2 = (m[0] * m[4] - m[1] * m[3]) + (m[0] * m[8] - m[2] * m[6]) +
                        (m[4] * m[8] - m[5] * m[7]);
  Deg3Element sharp = mul(a, a) - t * a + sigma2 * one();
  return {n, t, std::move(sharp)};
}

Scalar Deg3Algebra::norm(const Deg3Element& a) const {
  check(a);
  if (kind_ == Deg3Kind::Matrix3) return mat3::det(a);
  if (kind_ == Deg3Kind::SplitEtale) return a[0] * a[1] * a[2];
  return norm_trace_sharp(a).norm;
}

Scalar Deg3Algebra::trace(const Deg3Element& a) const {
  check(a);
  switch (kind_) {
    case Deg3Kind::Matrix3:
      return a[0] + a[4] + a[8];
    case Deg3Kind::SplitEtale:
      return a[0] + a[1] + a[2];
    case Deg3Kind::CubicQuotient:
      break;
  }
  // Trace of multiplication by a0 + a1 t + a2 t^2 on {1, t, t^2}.
  const auto m = regular_representation(a);
  return m[0] + m[4] + m[8];
}

Deg3Element Deg3Algebra::sharp(const Deg3Element& a) const {
  check(a);
  if (kind_ == Deg3Kind::Matrix3) return mat3::adjugate(a);
  if (kind_ == Deg3Kind::SplitEtale) return Deg3Element{{a[1] * a[2], a[0] * a[2], a[0] * a[1]}};
  return norm_trace_sharp(a).sharp;
}

Deg3Element Deg3Algebra::inverse(const Deg3Element& a) const {
  const auto nts = norm_trace_sharp(a);
  if (nts.norm.is_zero()) throw NotInvertible("element has zero norm");
  return nts.norm.inverse() * nts.sharp;
}

Deg3Element Deg3Algebra::to_matrix3(const Deg3Element& a) const {
  check(a);
  switch (kind_) {
    case Deg3Kind::Matrix3:
      return a;
    case Deg3Kind::SplitEtale: {
      Deg3Element r{std::vector<Scalar>(9, field_.zero())};
      r[0] = a[0];
      r[4] = a[1];
      r[8] = a[2];
      return r;
    }
    case Deg3Kind::CubicQuotient: {
      const auto m = regular_representation(a);
      return Deg3Element{{m.begin(), m.end()}};
    }
  }
  throw AlgebraMismatch("unknown algebra kind");
}

QuadraticEtale discriminant_algebra(const Deg3Algebra& e) {
  const GroundField& k = e.field();
  switch (e.kind()) {
    case Deg3Kind::Matrix3:
      throw NotCommutative("discriminant algebra needs a commutative cubic algebra");
    case Deg3Kind::SplitEtale:
      return {k.one(), true};
    case Deg3Kind::CubicQuotient: {
      const Scalar d = cubic_discriminant(e.cubic_coefficients());
      if (d.is_zero()) throw NotEtale("zero discriminant");
      return {d, square_class(d).is_trivial()};
    }
  }
  throw AlgebraMismatch("unknown algebra kind");
}

// ---------------------------------------------------------------------------
// Residue factors

namespace {

Deg3Element poly_to_element(const Deg3Algebra& e, const modpoly::Poly& poly) {
  Deg3Element r = e.zero();
  const GroundField& k = e.field();
  for (std::size_t i = 0; i < poly.size() && i < 3; ++i)
    r[i] = k.from_int(static_cast<std::int64_t>(poly[i]));
  return r;
}

// Coefficients of an element of F_p or F_p[s]/(g) as an F_p polynomial.
modpoly::Poly scalar_to_poly(const Scalar& c) {
  const auto co = c.coefficients();
  return modpoly::trim({co[0], co[1], co[2]});
}

}  // namespace

Scalar ResidueFactor::project(const Deg3Algebra& e, const Deg3Element& a) const {
  if (e.kind() == Deg3Kind::SplitEtale) {
    for (int i = 0; i < 3; ++i)
      if (idempotent[i].is_one()) return a[i];
    throw InvalidArgument("malformed split residue factor");
  }
  // Evaluate a0 + a1 t + a2 t^2 at the class of t in K.
  const Scalar t = field.degree() == 1 ? field.from_int(0) - field.from_int(static_cast<std::int64_t>(modulus[0]))
                                       : field.generator();
  return field.embed(a[0]) + field.embed(a[1]) * t + field.embed(a[2]) * t * t;
}

Deg3Element ResidueFactor::lift(const Deg3Algebra& e, const Scalar& c) const {
  if (e.kind() == Deg3Kind::SplitEtale) return e.field().embed(c) * idempotent;
  const Deg3Element rep = poly_to_element(e, scalar_to_poly(c));
  return e.mul(idempotent, rep);
}

std::vector<ResidueFactor> residue_factors(const Deg3Algebra& e) {
  const GroundField& k = e.field();
  if (k.kind() != FieldKind::Prime) throw InvalidArgument("residue factors need a prime field");
  std::vector<ResidueFactor> out;
  const std::uint64_t p = k.characteristic();
  if (e.kind() == Deg3Kind::SplitEtale) {
    for (int i = 0; i < 3; ++i)
      out.push_back({k, modpoly::Poly{0, 1}, e.basis(i)});
    return out;
  }
  if (e.kind() != Deg3Kind::CubicQuotient) throw NotCommutative("residue factors need commutative E");

  const auto& low = e.cubic_coefficients();
  const modpoly::Poly f{low[0].residue(), low[1].residue(), low[2].residue(), 1};
  Rng rng(p ^ 0x5eedULL);
  for (const auto& g : modpoly::factor_small(f, p, rng)) {
    ResidueFactor rf{k, g, e.zero()};
    if (modpoly::degree(g) > 1) {
      const modpoly::Poly low_g(g.begin(), g.end() - 1);
      rf.field = GroundField::extension(p, low_g);
    }
    // CRT idempotent: h = f / g, eps = h * (h mod g)^{-1} mod f.
    modpoly::Poly h = f;
    {
      // exact division by g
      modpoly::Poly q;
      modpoly::Poly rest = f;
      const int dg = modpoly::degree(g);
      q.assign(f.size() - g.size() + 1, 0);
      for (int i = static_cast<int>(rest.size()) - 1; i >= dg; --i) {
        const std::uint64_t coef = rest[i];
        q[i - dg] = coef;
        for (int j = 0; j <= dg; ++j) {
          const auto prod = static_cast<std::uint64_t>(static_cast<u128>(coef) * g[j] % p);
          rest[i - dg + j] = (rest[i - dg + j] + p - prod) % p;
        }
      }
      h = modpoly::trim(q);
    }
    const Deg3Element h_elem = poly_to_element(e, h);
    const Scalar h_image = rf.project(e, h_elem);
    const Deg3Element w = poly_to_element(e, scalar_to_poly(h_image.inverse()));
    rf.idempotent = e.mul(h_elem, w);
    out.push_back(std::move(rf));
  }
  return out;
}

}  // namespace albert
