#include "albert/tits.hpp"

namespace albert {

TitsModel TitsModel::build(const Deg3Algebra& a, const Scalar& lambda) {
  if (!(lambda.field() == a.field())) throw FieldMismatch("lambda is not in the ground field");
  if (lambda.is_zero()) throw ZeroLambda("first Tits construction needs an invertible lambda");
  const GroundField& k = a.field();
  const int n = a.dim();

  // Build a throwaway instance so the closed-form evaluators can run, then
  // read the structure tables off them.
  TitsModel proto(a, lambda,
                  CubicJordanModel("proto", k, 1, JordanElement::zeros(k, 1), {}, {{}}));
  JordanElement unit = JordanElement::zeros(k, 3 * n);
  for (int i = 0; i < n; ++i) unit[i] = a.one()[i];
  auto m = CubicJordanModel::from_closed_form(
      "tits1(" + a.describe() + "," + lambda.to_string() + ")", k, 3 * n, unit,
      [&proto](const JordanElement& x) { return proto.closed_norm(x); },
      [&proto](const JordanElement& x) { return proto.closed_sharp(x); });
  return TitsModel(a, lambda, std::move(m));
}

JordanElement TitsModel::pack(const Deg3Element& a0, const Deg3Element& a1,
                              const Deg3Element& a2) const {
  const int n = a_.dim();
  JordanElement x;
  x.coords.reserve(3 * n);
  for (const auto* s : {&a0, &a1, &a2}) {
    if (static_cast<int>(s->size()) != n) throw AlgebraMismatch("slot has the wrong dimension");
    x.coords.insert(x.coords.end(), s->coords.begin(), s->coords.end());
  }
  return x;
}

std::array<Deg3Element, 3> TitsModel::unpack(const JordanElement& x) const {
  const int n = a_.dim();
  if (static_cast<int>(x.size()) != 3 * n) throw ModelMismatch("element has the wrong dimension");
  std::array<Deg3Element, 3> out;
  for (int s = 0; s < 3; ++s)
    out[s].coords.assign(x.coords.begin() + s * n, x.coords.begin() + (s + 1) * n);
  return out;
}

JordanElement TitsModel::embed_first_slot(const Deg3Element& a) const {
  if (static_cast<int>(a.size()) != a_.dim())
    throw AlgebraMismatch("element does not belong to " + a_.describe());
  for (const auto& c : a.coords)
    if (!(c.field() == a_.field())) throw AlgebraMismatch("element has the wrong ground field");
  return pack(a, a_.zero(), a_.zero());
}

Scalar TitsModel::closed_norm(const JordanElement& x) const {
  const auto [a0, a1, a2] = unpack(x);
  const Scalar inv = lambda_.inverse();
  return a_.norm(a0) + lambda_ * a_.norm(a1) + inv * a_.norm(a2) -
         a_.trace(a_.mul(a_.mul(a0, a1), a2));
}

JordanElement TitsModel::closed_sharp(const JordanElement& x) const {
  const auto [a0, a1, a2] = unpack(x);
  const Scalar inv = lambda_.inverse();
  return pack(a_.sharp(a0) - a_.mul(a1, a2), inv * a_.sharp(a2) - a_.mul(a0, a1),
              lambda_ * a_.sharp(a1) - a_.mul(a2, a0));
}

TransMove lemma_trans_move(const TitsModel& t, const Deg3Element& y) {
  const Deg3Algebra& e = t.algebra();
  if (!e.is_commutative()) throw NotCommutative("the transitivity move needs a commutative E");
  const Scalar n = e.norm(y);
  if (n.is_zero()) throw NotInvertible("y has zero norm in E");
  const CubicJordanModel& m = t.model();

  TransMove out;
  out.norm = n;
  out.word.letters = {ULetter{t.pack(e.zero(), e.zero(), e.one())},
                      ULetter{t.pack(e.zero(), y, e.zero())}};
  const LinearMap g = eval_word(m, out.word);
  out.image = g.apply(t.embed_first_slot(y));
  out.normalized_word.letters.push_back(ScalarLetter{n.inverse()});
  for (const auto& l : out.word.letters) out.normalized_word.letters.push_back(l);
  out.normalized_image = eval_word(m, out.normalized_word).apply(t.embed_first_slot(y));
  return out;
}

}  // namespace albert
