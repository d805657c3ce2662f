#include "albert/springer.hpp"

namespace albert {

namespace {

constexpr const char* kSpringerAnchor =
    "(a_0,\\,a_1,\\,a_2)\\mapsto a_0-a_1\\times v-N(v)^{-1}a_2\\times v^\\#";
constexpr const char* kSubalgebraAnchor =
    "contained in a subalgebra of $J$ obtained by the first Tits construction from $E$";

JordanElement as_vector(const Deg3Element& a) { return JordanElement{a.coords}; }
Deg3Element as_deg3(const JordanElement& x) { return Deg3Element{x.coords}; }

void require_perp(const SpringerData& data, const JordanElement& x) {
  if (!data.to_e.apply(x).is_zero()) throw NotInComplement("element is not orthogonal to E");
}

LinearMap random_invertible(const GroundField& k, std::size_t n, Rng& rng) {
  for (;;) {
    LinearMap p = LinearMap::random(k, n, rng);
    if (p.rank() == n) return p;
  }
}

}  // namespace

std::string SubalgebraSpec::describe() const {
  switch (kind) {
    case SubalgebraKind::FirstSlot:
      return "first-slot";
    case SubalgebraKind::DiagonalMat3:
      return "diagonal-mat3";
    case SubalgebraKind::Companion:
      return "companion[" + f[0].to_string() + "," + f[1].to_string() + "," + f[2].to_string() +
             "]";
  }
  return "?";
}

JordanElement EtaleEmbedding::embed(const Deg3Element& a) const {
  if (static_cast<int>(a.size()) != 3) throw AlgebraMismatch("element of E has 3 coordinates");
  return iota.apply(as_vector(a));
}

EtaleEmbedding make_embedding(const TitsModel& t, const SubalgebraSpec& spec) {
  const Deg3Algebra& a = t.algebra();
  const GroundField& k = a.field();
  std::optional<Deg3Algebra> e;
  std::function<Deg3Element(const Deg3Element&)> into_a;
  switch (spec.kind) {
    case SubalgebraKind::FirstSlot:
      if (!a.is_commutative())
        throw UnsupportedSubalgebra("first-slot needs a commutative first Tits algebra");
      e = a;
      into_a = [](const Deg3Element& x) { return x; };
      break;
    case SubalgebraKind::DiagonalMat3:
      if (a.kind() != Deg3Kind::Matrix3)
        throw UnsupportedSubalgebra("diagonal-mat3 needs the model Tits(Mat3, lambda)");
      e = Deg3Algebra::split(k);
      into_a = [&e](const Deg3Element& x) { return e->to_matrix3(x); };
      break;
    case SubalgebraKind::Companion:
      if (a.kind() != Deg3Kind::Matrix3)
        throw UnsupportedSubalgebra("companion needs the model Tits(Mat3, lambda)");
      e = Deg3Algebra::cubic(k, spec.f);
      into_a = [&e](const Deg3Element& x) { return e->to_matrix3(x); };
      break;
  }
  std::vector<JordanElement> cols;
  for (int i = 0; i < 3; ++i) cols.push_back(t.embed_first_slot(into_a(e->basis(i))));
  EtaleEmbedding emb{*e, LinearMap::from_columns(k, t.model().dim(), cols), spec.describe()};
  if (!(emb.embed(emb.e.one()) == t.model().unit()))
    throw UnsupportedSubalgebra("subalgebra does not contain the unit");
  return emb;
}

SpringerData orthogonal_complement(const CubicJordanModel& m, const EtaleEmbedding& emb) {
  const GroundField& k = m.field();
  const std::size_t n = m.dim();
  LinearMap t(k, 3, n);
  for (int i = 0; i < 3; ++i) {
    const JordanElement ei = emb.embed(emb.e.basis(i));
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = m.trace_form(ei, m.basis(j));
  }
  LinearMap gram = t * emb.iota;
  const auto inv = gram.try_inverse();
  if (!inv) throw DegenerateTrace("T restricted to E is degenerate");
  LinearMap to_e = *inv * t;
  LinearMap proj_e = emb.iota * to_e;
  LinearMap proj_perp = LinearMap::identity(k, n) - proj_e;
  return {std::move(gram), std::move(to_e), std::move(proj_e), std::move(proj_perp),
          t.kernel_basis()};
}

JordanElement e_action(const CubicJordanModel& m, const EtaleEmbedding& emb,
                       const SpringerData& data, const Deg3Element& a, const JordanElement& x) {
  require_perp(data, x);
  return -m.cross(emb.embed(a), x);
}

SpringerValue springer_form(const CubicJordanModel& m, const EtaleEmbedding&,
                            const SpringerData& data, const JordanElement& x) {
  require_perp(data, x);
  const JordanElement s = m.sharp(x);
  return {as_deg3(data.to_e.apply(s)), data.proj_perp.apply(s)};
}

SpringerGram polarize(const CubicJordanModel& m, const EtaleEmbedding& emb,
                      const SpringerData& data, Rng& rng) {
  const GroundField& k = m.field();
  const std::size_t n = data.basis_perp.size();
  if (n % 3 != 0) throw BasisConstructionFailed("E-perp has dimension not divisible by 3");

  SpringerGram out;
  std::vector<JordanElement> span;
  int failures = 0;
  while (span.size() < n) {
    JordanElement w = m.zero();
    for (const auto& b : data.basis_perp) w += k.random(rng) * b;
    auto candidate = span;
    for (int j = 0; j < 3; ++j) candidate.push_back(e_action(m, emb, data, emb.e.basis(j), w));
    if (LinearMap::from_columns(k, m.dim(), candidate).rank() == candidate.size()) {
      span = std::move(candidate);
      out.basis.push_back(std::move(w));
    } else if (++failures > 64) {
      throw BasisConstructionFailed("no free E-basis of E-perp found after 64 rejected vectors");
    }
  }

  const std::size_t r = out.basis.size();
  const Scalar half = k.from_int(2).inverse();
  std::vector<Deg3Element> q;
  for (const auto& w : out.basis) q.push_back(springer_form(m, emb, data, w).q);
  out.gram.assign(r, std::vector<Deg3Element>(r));
  for (std::size_t a = 0; a < r; ++a) {
    out.gram[a][a] = q[a];
    for (std::size_t b = a + 1; b < r; ++b) {
      const Deg3Element s = springer_form(m, emb, data, out.basis[a] + out.basis[b]).q;
      out.gram[a][b] = out.gram[b][a] = half * (s - q[a] - q[b]);
    }
  }
  return out;
}

std::vector<FactorForm> factor_forms(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                     const SpringerData& data, const SpringerGram& g) {
  std::vector<FactorForm> out;
  const std::size_t r = g.basis.size();
  for (auto& f : residue_factors(emb.e)) {
    std::vector<JordanElement> basis;
    for (const auto& w : g.basis) basis.push_back(e_action(m, emb, data, f.idempotent, w));
    LinearMap gram(f.field, r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) gram.at(a, b) = f.project(emb.e, g.gram[a][b]);
    QuadraticForm form(std::move(gram));
    out.push_back({std::move(f), std::move(basis), std::move(form)});
  }
  return out;
}

JordanElement isotropic_invertible(const TitsModel& t, const EtaleEmbedding& emb,
                                   const SpringerData& data, IsotropicStrategy strategy,
                                   Rng& rng, std::uint64_t max_attempts) {
  const CubicJordanModel& m = t.model();
  auto good = [&](const JordanElement& v) {
    return springer_form(m, emb, data, v).q.is_zero() && m.is_invertible(v);
  };

  if (strategy == IsotropicStrategy::Constructive) {
    const Deg3Algebra& a = t.algebra();
    const JordanElement v = t.pack(a.zero(), a.one(), a.zero());
    if (!data.to_e.apply(v).is_zero() || !good(v))
      throw SearchExhausted("(0, 1, 0) is not an isotropic invertible vector for this subalgebra");
    return v;
  }

  if (m.field().kind() != FieldKind::Prime)
    throw InvalidArgument("randomized isotropic search needs a prime field");
  const SpringerGram g = polarize(m, emb, data, rng);
  const auto factors = factor_forms(m, emb, data, g);
  const std::size_t r = g.basis.size();
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Deg3Element> coeff(r, emb.e.zero());
    for (const auto& f : factors) {
      // A random change of basis spreads the conic solutions over the whole
      // isotropic cone instead of a fixed coordinate 3-space.
      const LinearMap p = random_invertible(f.factor.field, r, rng);
      const auto c = isotropic_vector(f.form.transformed(p), rng);
      if (!c) throw std::logic_error("reduced Springer form of rank >= 3 came out anisotropic");
      const JordanElement x = p.apply(*c);
      for (std::size_t a = 0; a < r; ++a) coeff[a] += f.factor.lift(emb.e, x[a]);
    }
    JordanElement v = m.zero();
    for (std::size_t a = 0; a < r; ++a) v += e_action(m, emb, data, coeff[a], g.basis[a]);
    if (good(v)) return v;
  }
  throw SearchExhausted("no isotropic invertible vector in " + std::to_string(max_attempts) +
                        " samples");
}

SpringerEmbedding springer_embedding(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                     const SpringerData& data, const JordanElement& v) {
  if (!springer_form(m, emb, data, v).q.is_zero()) throw NotIsotropic("q_E(v) != 0");
  const Scalar nv = m.norm(v);
  if (nv.is_zero()) throw NotInvertible("N(v) = 0");
  const JordanElement one = emb.embed(emb.e.one());
  Scalar lambda = m.norm(-m.cross(one, v));
  TitsModel source = TitsModel::build(emb.e, lambda);

  const JordanElement vs = m.sharp(v);
  const Scalar ninv = nv.inverse();
  std::vector<JordanElement> cols;
  for (int i = 0; i < 3; ++i) cols.push_back(emb.embed(emb.e.basis(i)));
  for (int i = 0; i < 3; ++i) cols.push_back(-m.cross(emb.embed(emb.e.basis(i)), v));
  for (int i = 0; i < 3; ++i) cols.push_back(-(ninv * m.cross(emb.embed(emb.e.basis(i)), vs)));
  LinearMap map = LinearMap::from_columns(m.field(), m.dim(), cols);
  return {std::move(lambda), std::move(source), std::move(map)};
}

std::vector<Check> embedding_checks(const CubicJordanModel& m, const EtaleEmbedding& emb,
                                    std::uint64_t samples, std::uint64_t seed, Execution exec) {
  const char* anchor = "Let $E$ be a cubic \\'etale subalgebra of $J$";
  std::vector<Check> out;
  out.push_back(run_trials(
      "iota(1) = 1", anchor, 1, seed,
      [&](std::uint64_t, Rng&) -> std::optional<json> {
        const auto one = emb.embed(emb.e.one());
        if (one == m.unit()) return std::nullopt;
        return json{{"iota(1)", to_json(one)}};
      },
      exec));
  out.push_back(run_trials(
      "N_J(iota(a)) = N_E(a), iota(a)^# = iota(a^#)", anchor, samples, seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto a = emb.e.random(rng);
        const auto x = emb.embed(a);
        if (m.norm(x) == emb.e.norm(a) && m.sharp(x) == emb.embed(emb.e.sharp(a)))
          return std::nullopt;
        return json{{"a", a.to_string()}};
      },
      exec));
  return out;
}

std::vector<Check> springer_embedding_checks(const CubicJordanModel& m,
                                             const SpringerEmbedding& s,
                                             const JordanElement& v, std::uint64_t samples,
                                             std::uint64_t seed, Execution exec) {
  const CubicJordanModel& src = s.source.model();
  using W = std::optional<json>;
  std::vector<Check> out;
  out.push_back(run_trials(
      "iota_v(1) = 1", kSpringerAnchor, 1, seed,
      [&](std::uint64_t, Rng&) -> W {
        const auto img = s.map.apply(src.unit());
        if (img == m.unit()) return std::nullopt;
        return json{{"iota_v(1)", to_json(img)}};
      },
      exec));
  out.push_back(run_trials(
      "iota_v injective", kSpringerAnchor, 1, seed,
      [&](std::uint64_t, Rng&) -> W {
        const auto r = s.map.rank();
        if (r == 9) return std::nullopt;
        return json{{"rank", std::to_string(r)}};
      },
      exec));
  out.push_back(run_trials(
      "N_J(iota_v(x)) = N(x)", kSpringerAnchor, samples, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = src.random(rng);
        if (m.norm(s.map.apply(x)) == src.norm(x)) return std::nullopt;
        return json{{"x", to_json(x)}};
      },
      exec));
  out.push_back(run_trials(
      "iota_v(x)^# = iota_v(x^#)", kSpringerAnchor, samples, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = src.random(rng);
        if (m.sharp(s.map.apply(x)) == s.map.apply(src.sharp(x))) return std::nullopt;
        return json{{"x", to_json(x)}};
      },
      exec));
  out.push_back(run_trials(
      "iota_v(0,1,0) = v, N(v) = lambda'", kSubalgebraAnchor, 1, seed,
      [&](std::uint64_t, Rng&) -> W {
        const Deg3Algebra& e = s.source.algebra();
        const auto img = s.map.apply(s.source.pack(e.zero(), e.one(), e.zero()));
        if (img == v && m.norm(img) == s.lambda_prime) return std::nullopt;
        return json{{"image", to_json(img)}, {"lambda'", to_json(s.lambda_prime)}};
      },
      exec));
  Check& c = out.front();
  c.details["lambda_prime"] = s.lambda_prime.to_string();
  return out;
}

}  // namespace albert
