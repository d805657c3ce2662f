#include "albert/axioms.hpp"

namespace albert {

JordanElement QuadraticJordanView::random(Rng& rng) const {
  JordanElement x = JordanElement::zeros(field, dim);
  for (auto& c : x.coords) c = field.random(rng);
  return x;
}

QuadraticJordanView quadratic_view(const CubicJordanModel& model) {
  return {model.field(), model.dim(), model.unit(),
          [&model](const JordanElement& x, const JordanElement& y) { return model.u_op(x, y); },
          [&model](const JordanElement& x) { return model.u_matrix(x); }};
}

std::vector<Check> quadratic_axioms(const QuadraticJordanView& view, std::uint64_t trials,
                                    std::uint64_t seed, Execution exec) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  std::vector<Check> out;

  out.push_back(run_trials(
      "U_1 = id", "U_1=\\id_J", trials, seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto y = view.random(rng);
        const auto lhs = view.u(view.unit, y);
        if (lhs == y) return std::nullopt;
        return json{{"y", to_json(y)}, {"U_1 y", to_json(lhs)}};
      },
      exec));

  out.push_back(run_trials(
      "{x,y,U_x z} = U_x {y,x,z}", "\\{x,\\,y,\\,U_xz\\}=U_x\\{y,\\,x,\\,z\\}", trials, seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto x = view.random(rng), y = view.random(rng), z = view.random(rng);
        const auto lhs = view.triple(x, y, view.u(x, z));
        const auto rhs = view.u(x, view.triple(y, x, z));
        if (lhs == rhs) return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
      },
      exec));

  out.push_back(run_trials(
      "U_{U_x y} = U_x U_y U_x", "U_{U_xy}=U_xU_yU_x", trials, seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto x = view.random(rng), y = view.random(rng), z = view.random(rng);
        const auto lhs = view.u(view.u(x, y), z);
        const auto rhs = view.u(x, view.u(y, view.u(x, z)));
        if (lhs == rhs) return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
      },
      exec));
  return out;
}

std::vector<Check> cubic_axioms(const CubicJordanModel& m, std::uint64_t trials, std::uint64_t seed,
                                Execution exec) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  const GroundField& k = m.field();
  std::vector<Check> out;
  using W = std::optional<json>;

  out.push_back(run_trials(
      "N(t x) = t^3 N(x)", "N(tx)=t^3N(x)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng);
        const auto t = k.random(rng);
        if (m.norm(t * x) == t * t * t * m.norm(x)) return std::nullopt;
        return json{{"x", to_json(x)}, {"t", to_json(t)}};
      },
      exec));

  out.push_back(run_trials(
      "N(x+y) = N(x) + dN(x,y) + dN(y,x) + N(y)", "N(tx)=t^3N(x)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng), y = m.random(rng);
        if (m.norm(x + y) == m.norm(x) + m.dnorm(x, y) + m.dnorm(y, x) + m.norm(y))
          return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}};
      },
      exec));

  out.push_back(run_trials(
      "(x^#)^# = N(x) x", "$(x^\\#)^\\#=N(x)x$", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng);
        if (m.sharp(m.sharp(x)) == m.norm(x) * x) return std::nullopt;
        return json{{"x", to_json(x)}};
      },
      exec));

  // Deterministic: a single evaluation decides it.
  out.push_back(run_trials(
      "1^# = 1, N(1) = 1", "$1^\\#=1$; $N(1)=1$", 1, seed,
      [&](std::uint64_t, Rng&) -> W {
        const auto s = m.sharp(m.unit());
        const auto n = m.norm(m.unit());
        if (s == m.unit() && n.is_one()) return std::nullopt;
        return json{{"1^#", to_json(s)}, {"N(1)", to_json(n)}};
      },
      exec));

  out.push_back(run_trials(
      "T(x^#, y) = dN(x, y)", "T(x^\\#,\\,y)=\\delta N(x,\\,y)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng), y = m.random(rng);
        if (m.trace_form(m.sharp(x), y) == m.dnorm(x, y)) return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}};
      },
      exec));

  out.push_back(run_trials(
      "1 x x = T(x) 1 - x", "1\\times x=T(x)1-x", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng);
        if (m.cross(m.unit(), x) == m.trace(x) * m.unit() - x) return std::nullopt;
        return json{{"x", to_json(x)}};
      },
      exec));

  out.push_back(run_trials(
      "(t x)^# = t^2 x^#", "N(tx)=t^3N(x)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng);
        const auto t = k.random(rng);
        if (m.sharp(t * x) == (t * t) * m.sharp(x)) return std::nullopt;
        return json{{"x", to_json(x)}, {"t", to_json(t)}};
      },
      exec));

  out.push_back(run_trials(
      "dN(t x, y) = t^2 dN(x, y)", "N(tx)=t^3N(x)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng), y = m.random(rng);
        const auto t = k.random(rng);
        if (m.dnorm(t * x, y) == t * t * m.dnorm(x, y)) return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}, {"t", to_json(t)}};
      },
      exec));

  out.push_back(run_trials(
      "T(x, y) = T(y, x)", "T(x,\\,y)=T(x)T(y)-N(1,\\,x,\\,y)", trials, seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto x = m.random(rng), y = m.random(rng);
        if (m.trace_form(x, y) == m.trace_form(y, x)) return std::nullopt;
        return json{{"x", to_json(x)}, {"y", to_json(y)}};
      },
      exec));
  return out;
}

Report axiom_suite(const CubicJordanModel& model, std::uint64_t trials, std::uint64_t seed,
                   Execution exec) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  Report report;
  report.command = "verify-axioms";
  report.environment = {{"model", model.name()}, {"field", model.field().name()},
                        {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
  report.append(cubic_axioms(model, trials, seed, exec));
  report.append(quadratic_axioms(quadratic_view(model), trials, seed, exec));
  return report;
}

}  // namespace albert
