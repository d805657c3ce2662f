#include "albert/discr.hpp"

namespace albert {

namespace {

constexpr const char* kDiscrAnchor =
    "q_E={N_{\\delta(E)}}_E\\perp {\\bf h}_E\\perp {\\bf h}_E\\perp {\\bf h}_E";

QuadraticForm expected_form(const GroundField& k, const Scalar& d, std::size_t planes) {
  QuadraticForm q = QuadraticForm::diagonal(k, {k.one(), -k.embed(d)});
  for (std::size_t i = 0; i < planes; ++i) q = q.orthogonal_sum(QuadraticForm::hyperbolic(k));
  return q;
}

std::string modulus_string(const modpoly::Poly& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + "]";
}

}  // namespace

std::array<Scalar, 3> irreducible_cubic(const GroundField& k) {
  if (k.kind() != FieldKind::Prime) throw InvalidArgument("irreducible_cubic needs a prime field");
  const std::uint64_t p = k.characteristic();
  Rng rng(p);
  for (std::uint64_t c0 = 1; c0 < p; ++c0)
    for (std::uint64_t c1 = 0; c1 < p; ++c1)
      if (modpoly::roots({c0, c1, 0, 1}, p, rng).empty())
        return {k.from_int(static_cast<std::int64_t>(c0)), k.from_int(static_cast<std::int64_t>(c1)),
                k.zero()};
  throw SearchExhausted("no irreducible cubic t^3 + c1 t + c0");
}

std::array<Scalar, 3> nonsquare_disc_cubic(const GroundField& k) {
  if (k.kind() != FieldKind::Prime) throw InvalidArgument("nonsquare_disc_cubic needs a prime field");
  Scalar n = k.from_int(2);
  while (square_class(n) == SquareClass::square()) n += k.one();
  // (t - 1)(t^2 - n) = t^3 - t^2 - n t + n
  return {n, -n, -k.one()};
}

std::vector<Check> lemma_discr_check(const TitsModel& t, const SubalgebraSpec& spec,
                                     std::uint64_t seed) {
  const CubicJordanModel& m = t.model();
  const GroundField& k = m.field();
  if (t.algebra().kind() != Deg3Kind::Matrix3 || k.kind() != FieldKind::Prime)
    throw NotSplitModel("the discriminant check runs on Tits(Mat3, lambda) over F_p");
  if (spec.kind == SubalgebraKind::FirstSlot)
    throw UnsupportedSubalgebra("use a diagonal-mat3 or companion subalgebra");

  const EtaleEmbedding emb = make_embedding(t, spec);
  const SpringerData data = orthogonal_complement(m, emb);
  Rng rng(seed);
  const SpringerGram g = polarize(m, emb, data, rng);
  const QuadraticEtale delta = discriminant_algebra(emb.e);

  std::vector<Check> out;
  Check rank{"E-rank of q_E", kDiscrAnchor, 1, 0, std::nullopt, json::object()};
  rank.details = {{"dim_E_perp", std::to_string(data.basis_perp.size())},
                  {"E_rank", std::to_string(g.basis.size())}};
  if (g.basis.size() == 8 && data.basis_perp.size() == 24)
    rank.passed = 1;
  else
    rank.witness = rank.details;
  out.push_back(std::move(rank));

  std::size_t index = 0;
  for (const auto& f : factor_forms(m, emb, data, g)) {
    const std::uint64_t s = seed + 1 + index;
    const WittInvariants got = witt_invariants(f.form, s);
    const WittInvariants want = witt_invariants(expected_form(f.factor.field, delta.d, 3), s);
    Check c{"Witt invariants of q_E over K_" + std::to_string(index), kDiscrAnchor, 1, 0,
            std::nullopt, json::object()};
    c.details = {{"residue_field", f.factor.field.name()},
                 {"modulus", modulus_string(f.factor.modulus)},
                 {"d", delta.d.to_string()},
                 {"q_E", got.to_json()},
                 {"expected", want.to_json()}};
    if (got == want)
      c.passed = 1;
    else
      c.witness = c.details;
    out.push_back(std::move(c));
    ++index;
  }
  return out;
}

}  // namespace albert
