#include "albert/isotopy.hpp"

namespace albert {

QuadraticJordanView isotope(const CubicJordanModel& model, const JordanElement& v) {
  const JordanElement unit = model.inverse(v);
  const LinearMap uv = model.u_matrix(v);
  return {model.field(), model.dim(), unit,
          [&model, uv](const JordanElement& x, const JordanElement& y) {
            return model.u_op(x, uv.apply(y));
          },
          [&model, uv](const JordanElement& x) { return model.u_matrix(x) * uv; }};
}

json StructureWord::to_json() const {
  json out = json::array();
  for (const auto& l : letters) {
    if (const auto* s = std::get_if<ScalarLetter>(&l))
      out.push_back({{"scalar", s->c.to_string()}});
    else
      out.push_back({{"u", std::get<ULetter>(l).x.render()}});
  }
  return out;
}

StructureWord StructureWord::from_json(const json& j, const GroundField& k) {
  if (!j.is_array()) throw InvalidArgument("structure word must be a JSON array");
  StructureWord w;
  for (const auto& item : j) {
    if (!item.is_object() || item.size() != 1)
      throw InvalidArgument("word letter must be {\"scalar\":..} or {\"u\":[..]}");
    if (item.contains("scalar")) {
      if (!item["scalar"].is_string()) throw InvalidArgument("scalar letter must be a string");
      w.letters.push_back(ScalarLetter{k.parse_element(item["scalar"].get<std::string>())});
    } else if (item.contains("u")) {
      const auto& coords = item["u"];
      if (!coords.is_array()) throw InvalidArgument("u letter must be an array of strings");
      JordanElement x;
      for (const auto& c : coords) {
        if (!c.is_string()) throw InvalidArgument("u letter must be an array of strings");
        x.coords.push_back(k.parse_element(c.get<std::string>()));
      }
      w.letters.push_back(ULetter{std::move(x)});
    } else {
      throw InvalidArgument("word letter must be {\"scalar\":..} or {\"u\":[..]}");
    }
  }
  return w;
}

LinearMap letter_map(const CubicJordanModel& model, const WordLetter& letter) {
  if (const auto* s = std::get_if<ScalarLetter>(&letter)) {
    if (s->c.is_zero()) throw NotInvertible("scalar letter is zero");
    return LinearMap::identity(model.field(), model.dim()).scaled(s->c);
  }
  const auto& x = std::get<ULetter>(letter).x;
  if (!model.is_invertible(x)) throw NotInvertible("U letter at a non-invertible element");
  return model.u_matrix(x);
}

LinearMap eval_word(const CubicJordanModel& model, const StructureWord& word) {
  LinearMap acc = LinearMap::identity(model.field(), model.dim());
  for (const auto& l : word.letters) acc = acc * letter_map(model, l);
  return acc;
}

Check autotopy_check(const CubicJordanModel& model, const LinearMap& g, std::uint64_t samples,
                     std::uint64_t seed, Execution exec) {
  if (g.rows() != static_cast<std::size_t>(model.dim()) || g.cols() != g.rows())
    throw ModelMismatch("map has the wrong shape for this model");
  const LinearMap g_inv = g.inverse();
  const LinearMap right = g_inv * model.u_matrix(g.apply(model.unit()));
  Check c = run_trials(
      "U_{g(x)} = g U_x g^{-1} U_{g(1)}", "U_{g(x)}=gU_xg^{-1}U_{g(1)}", samples, seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto x = model.random(rng);
        if (model.u_matrix(g.apply(x)) == g * model.u_matrix(x) * right) return std::nullopt;
        return json{{"x", albert::to_json(x)}};
      },
      exec);
  // Both sides are quadratic in x, so a non-autotopy survives one sample with
  // probability at most 2/|k|.
  const GroundField& k = model.field();
  if (k.is_finite()) {
    std::string q = std::to_string(k.characteristic());
    if (k.degree() > 1) q += "^" + std::to_string(k.degree());
    c.details["error_bound_per_sample"] = "2/" + q;
  }
  return c;
}

bool is_autotopy(const CubicJordanModel& model, const LinearMap& g, std::uint64_t samples,
                 std::uint64_t seed, Execution exec) {
  return autotopy_check(model, g, samples, seed, exec).ok();
}

}  // namespace albert
