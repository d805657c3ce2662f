#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "albert/axioms.hpp"
#include "albert/discr.hpp"
#include "albert/isotopy.hpp"
#include "albert/springer.hpp"
#include "albert/tits.hpp"

namespace albert::cli {

namespace {

constexpr const char* kDefaultField = "Fp:2147483647";

struct Options {
  std::string command;
  std::string which;
  std::string field;
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  bool serial = false;
};

// Everything a command needs, resolved from flags (first), the config file,
// then per-command defaults.
struct Settings {
  json config = json::object();
  GroundField field = GroundField::rationals();
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
};

std::uint64_t to_u64(const json& j, const char* key) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && !s.empty()) return v;
  }
  throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
}

Scalar scalar_from(const json& j, const GroundField& k, const char* what) {
  if (j.is_string()) return k.parse_element(j.get<std::string>());
  if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
  throw ConfigError(std::string(what) + " must be a string or an integer");
}

JordanElement element_from(const json& j, const GroundField& k, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ConfigError(std::string(what) + " must be an array of " + std::to_string(dim) +
                      " coordinates");
  JordanElement x;
  for (const auto& c : j) x.coords.push_back(scalar_from(c, k, what));
  return x;
}

std::array<Scalar, 3> cubic_from(const json& j, const GroundField& k) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("'f' must be [c0, c1, c2]");
  return {scalar_from(j[0], k, "f"), scalar_from(j[1], k, "f"), scalar_from(j[2], k, "f")};
}

Deg3Algebra algebra_from(const json& j, const GroundField& k) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("algebra must be {\"kind\": \"split\" | \"cubic\" | \"mat3\"}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "split") return Deg3Algebra::split(k);
  if (kind == "mat3") return Deg3Algebra::matrix3(k);
  if (kind == "cubic") {
    if (!j.contains("f")) throw ConfigError("cubic algebra needs 'f'");
    return Deg3Algebra::cubic(k, cubic_from(j["f"], k));
  }
  throw ConfigError("unknown algebra kind '" + kind + "'");
}

TitsModel model_from(const Settings& s, const char* default_kind) {
  json jordan = s.config.value("jordan", json::object());
  if (!jordan.is_object()) throw ConfigError("'jordan' must be an object");
  const std::string construction = jordan.value("construction", std::string("tits1"));
  if (construction != "tits1") throw ConfigError("only the 'tits1' construction is supported");
  const json algebra = jordan.value("algebra", json{{"kind", default_kind}});
  const Scalar lambda =
      jordan.contains("lambda") ? scalar_from(jordan["lambda"], s.field, "lambda") : s.field.one();
  return TitsModel::build(algebra_from(algebra, s.field), lambda);
}

SubalgebraSpec subalgebra_from(const Settings& s, const TitsModel& t) {
  SubalgebraSpec spec;
  const bool commutative = t.algebra().is_commutative();
  const std::string name = s.config.value(
      "subalgebra", std::string(commutative ? "first-slot" : "diagonal-mat3"));
  if (name == "first-slot") {
    spec.kind = SubalgebraKind::FirstSlot;
  } else if (name == "diagonal-mat3") {
    spec.kind = SubalgebraKind::DiagonalMat3;
  } else if (name == "companion") {
    spec.kind = SubalgebraKind::Companion;
    if (!s.config.contains("f")) throw ConfigError("companion subalgebra needs 'f'");
    spec.f = cubic_from(s.config["f"], s.field);
  } else {
    throw ConfigError("unknown subalgebra '" + name + "'");
  }
  return spec;
}

json environment(const std::string& command, const Settings& s, const TitsModel& t) {
  return {{"command", command},
          {"field", s.field.name()},
          {"jordan",
           {{"construction", "tits1"},
            {"algebra", t.algebra().describe()},
            {"lambda", t.lambda().to_string()}}},
          {"trials", std::to_string(s.trials)},
          {"seed", std::to_string(s.seed)}};
}

void prefix(std::vector<Check>& checks, const std::string& p) {
  for (auto& c : checks) c.name = p + c.name;
}

Report verify_axioms(const Settings& s) {
  const TitsModel t = model_from(s, "mat3");
  json env = environment("verify-axioms", s, t);
  if (!s.config.contains("mutation")) {
    Report r = axiom_suite(t.model(), s.trials, s.seed, s.exec);
    r.environment = std::move(env);
    return r;
  }
  const json& mu = s.config["mutation"];
  if (!mu.is_object()) throw ConfigError("'mutation' must be an object");
  const auto get = [&](const char* key) -> int {
    if (!mu.contains(key)) throw ConfigError(std::string("mutation needs '") + key + "'");
    return static_cast<int>(to_u64(mu[key], key));
  };
  const Scalar delta =
      mu.contains("delta") ? scalar_from(mu["delta"], s.field, "delta") : s.field.one();
  const CubicJordanModel bad =
      t.model().with_sharp_perturbation(get("output"), get("i"), get("j"), delta);
  Report r = axiom_suite(bad, s.trials, s.seed, s.exec);
  env["mutation"] = {{"output", std::to_string(get("output"))},
                     {"i", std::to_string(get("i"))},
                     {"j", std::to_string(get("j"))},
                     {"delta", delta.to_string()}};
  r.environment = std::move(env);
  return r;
}

Report lemma_trans(const Settings& s) {
  const TitsModel t = model_from(s, "split");
  if (!t.algebra().is_commutative())
    throw NotCommutative("lemma trans needs a commutative algebra E");
  const Deg3Algebra& e = t.algebra();
  const CubicJordanModel& m = t.model();
  Report r;
  r.command = "lemma trans";
  r.environment = environment(r.command, s, t);
  r.checks.push_back(run_trials(
      "U_(0,0,1) U_(0,y,0) (y,0,0) = N(y) 1", "U_{(0,\\,0,\\,1)}U_{(0,\\,y,\\,0)}y=N(y)1",
      s.trials, s.seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto y = e.random_invertible(rng);
        const auto mv = lemma_trans_move(t, y);
        if (mv.image == mv.norm * m.unit()) return std::nullopt;
        return json{{"y", y.to_string()}, {"image", to_json(mv.image)}};
      },
      s.exec));
  r.checks.push_back(run_trials(
      "N(y)^{-1} U_(0,0,1) U_(0,y,0) maps y to 1", "lies in the orbit of $1$", s.trials, s.seed,
      [&](std::uint64_t, Rng& rng) -> std::optional<json> {
        const auto y = e.random_invertible(rng);
        const auto mv = lemma_trans_move(t, y);
        if (mv.normalized_image == m.unit()) return std::nullopt;
        return json{{"y", y.to_string()}, {"word", mv.normalized_word.to_json()}};
      },
      s.exec));
  return r;
}

JordanElement random_perp(const CubicJordanModel& m, const SpringerData& d, Rng& rng) {
  JordanElement x = m.zero();
  for (const auto& b : d.basis_perp) x += m.field().random(rng) * b;
  return x;
}

Report lemma_springer(const Settings& s) {
  const TitsModel t = model_from(s, "mat3");
  const SubalgebraSpec spec = subalgebra_from(s, t);
  const CubicJordanModel& m = t.model();
  const EtaleEmbedding emb = make_embedding(t, spec);
  const SpringerData data = orthogonal_complement(m, emb);
  const Deg3Algebra& e = emb.e;
  using W = std::optional<json>;

  Report r;
  r.command = "lemma springer";
  r.environment = environment(r.command, s, t);
  r.environment["subalgebra"] = spec.describe();
  r.append(embedding_checks(m, emb, s.trials, s.seed, s.exec));

  r.checks.push_back(run_trials(
      "dim E^perp = dim J - 3", "projective $R$-module of rank $24$", 1, s.seed,
      [&](std::uint64_t, Rng&) -> W {
        if (static_cast<int>(data.basis_perp.size()) == m.dim() - 3) return std::nullopt;
        return json{{"dim", std::to_string(data.basis_perp.size())}};
      },
      s.exec));
  r.checks.push_back(run_trials(
      "T(iota(a), x) = 0 for x in E^perp", "Denote by $E^\\perp$ the orthogonal complement",
      s.trials, s.seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto a = e.random(rng);
        const auto x = random_perp(m, data, rng);
        if (m.trace_form(emb.embed(a), x).is_zero()) return std::nullopt;
        return json{{"a", a.to_string()}, {"x", to_json(x)}};
      },
      s.exec));
  r.checks.push_back(run_trials(
      "1.x = x, (ab).x = a.(b.x)", "(a,\\,x)\\mapsto -a\\times x", s.trials, s.seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto a = e.random(rng), b = e.random(rng);
        const auto x = random_perp(m, data, rng);
        const auto bx = e_action(m, emb, data, b, x);
        if (e_action(m, emb, data, e.one(), x) == x &&
            e_action(m, emb, data, e.mul(a, b), x) == e_action(m, emb, data, a, bx))
          return std::nullopt;
        return json{{"a", a.to_string()}, {"b", b.to_string()}, {"x", to_json(x)}};
      },
      s.exec));
  r.checks.push_back(run_trials(
      "q_E(a.x) = a^2 q_E(x)", "x^\\#=q_E(x)+r_E(x)", s.trials, s.seed,
      [&](std::uint64_t, Rng& rng) -> W {
        const auto a = e.random(rng);
        const auto x = random_perp(m, data, rng);
        const auto lhs = springer_form(m, emb, data, e_action(m, emb, data, a, x)).q;
        if (lhs == e.mul(e.mul(a, a), springer_form(m, emb, data, x).q)) return std::nullopt;
        return json{{"a", a.to_string()}, {"x", to_json(x)}};
      },
      s.exec));
  if (spec.kind == SubalgebraKind::FirstSlot)
    r.checks.push_back(run_trials(
        "q_E((0,a1,a2)) = -a1 a2", "x^\\#=q_E(x)+r_E(x)", s.trials, s.seed,
        [&](std::uint64_t, Rng& rng) -> W {
          const auto a1 = e.random(rng), a2 = e.random(rng);
          const auto q = springer_form(m, emb, data, t.pack(e.zero(), a1, a2)).q;
          if (q == -e.mul(a1, a2)) return std::nullopt;
          return json{{"a1", a1.to_string()}, {"a2", a2.to_string()}};
        },
        s.exec));

  std::vector<JordanElement> vs;
  if (s.config.contains("v")) {
    vs.push_back(element_from(s.config["v"], s.field, m.dim(), "v"));
  } else {
    const std::string strategy = s.config.value(
        "strategy",
        std::string(s.field.kind() == FieldKind::Prime ? "randomized" : "constructive"));
    IsotropicStrategy st;
    if (strategy == "constructive")
      st = IsotropicStrategy::Constructive;
    else if (strategy == "randomized")
      st = IsotropicStrategy::Randomized;
    else
      throw ConfigError("strategy must be 'constructive' or 'randomized'");
    const std::uint64_t count =
        s.config.contains("vectors") ? to_u64(s.config["vectors"], "vectors") : 1;
    Rng rng(s.seed);
    for (std::uint64_t i = 0; i < count; ++i)
      vs.push_back(isotropic_invertible(t, emb, data, st, rng));
  }
  json vlist = json::array();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const SpringerEmbedding se = springer_embedding(m, emb, data, vs[i]);
    auto checks = springer_embedding_checks(m, se, vs[i], s.trials, s.seed + i, s.exec);
    prefix(checks, "v[" + std::to_string(i) + "]: ");
    r.append(std::move(checks));
    vlist.push_back({{"v", to_json(vs[i])}, {"lambda_prime", se.lambda_prime.to_string()}});
  }
  r.environment["v"] = vlist;
  return r;
}

Report lemma_discr(const Settings& s) {
  const TitsModel t = model_from(s, "mat3");
  const SubalgebraSpec spec = subalgebra_from(s, t);
  Report r;
  r.command = "lemma discr";
  r.environment = environment(r.command, s, t);
  r.environment["subalgebra"] = spec.describe();
  r.append(lemma_discr_check(t, spec, s.seed));
  return r;
}

LinearMap map_from(const json& j, const GroundField& k, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ConfigError("each map must be an array of " + std::to_string(dim) + " rows");
  std::vector<JordanElement> rows;
  for (const auto& row : j) rows.push_back(element_from(row, k, dim, "map row"));
  return LinearMap::from_rows(k, dim, rows);
}

Report isotopy(const Settings& s) {
  const TitsModel t = model_from(s, "mat3");
  const CubicJordanModel& m = t.model();
  Report r;
  r.command = "isotopy";
  r.environment = environment(r.command, s, t);

  JordanElement v;
  if (s.config.contains("v")) {
    v = element_from(s.config["v"], s.field, m.dim(), "v");
  } else {
    Rng rng(s.seed);
    v = m.random_invertible(rng);
  }
  r.environment["v"] = to_json(v);
  const QuadraticJordanView iso = isotope(m, v);
  r.checks.push_back(run_trials(
      "unit of J^(v) is v^{-1}: U'_{v^{-1}} = id", "1^{(v)}=v^{-1}", 1, s.seed,
      [&](std::uint64_t, Rng&) -> std::optional<json> {
        if (iso.u_matrix(iso.unit) == LinearMap::identity(m.field(), m.dim()) &&
            m.u_op(v, iso.unit) == v)
          return std::nullopt;
        return json{{"unit", to_json(iso.unit)}};
      },
      s.exec));
  auto axioms = quadratic_axioms(iso, s.trials, s.seed, s.exec);
  prefix(axioms, "J^(v): ");
  r.append(std::move(axioms));

  const std::uint64_t samples =
      s.config.contains("samples") ? to_u64(s.config["samples"], "samples") : 32;
  if (samples == 0) throw ConfigError("'samples' must be at least 1");
  r.environment["samples"] = std::to_string(samples);
  if (s.config.contains("words")) {
    const json& words = s.config["words"];
    if (!words.is_array()) throw ConfigError("'words' must be an array of structure words");
    for (std::size_t i = 0; i < words.size(); ++i) {
      const StructureWord w = StructureWord::from_json(words[i], s.field);
      Check c = autotopy_check(m, eval_word(m, w), samples, s.seed, s.exec);
      c.name = "word[" + std::to_string(i) + "]: " + c.name;
      c.details["word"] = w.to_json();
      r.checks.push_back(std::move(c));
    }
  }
  if (s.config.contains("maps")) {
    const json& maps = s.config["maps"];
    if (!maps.is_array()) throw ConfigError("'maps' must be an array of matrices");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      Check c = autotopy_check(m, map_from(maps[i], s.field, m.dim()), samples, s.seed, s.exec);
      c.name = "map[" + std::to_string(i) + "]: " + c.name;
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

Settings resolve(const Options& o, std::uint64_t default_trials) {
  Settings s;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("cannot read config file '" + o.config_path + "'");
    try {
      s.config = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!s.config.is_object()) throw ConfigError("config must be a JSON object");
  }
  std::string field = kDefaultField;
  if (s.config.contains("field")) {
    if (!s.config["field"].is_string()) throw ConfigError("'field' must be a string");
    field = s.config["field"].get<std::string>();
  }
  if (!o.field.empty()) field = o.field;
  s.field = GroundField::parse(field);
  s.trials = o.trials ? *o.trials
                      : (s.config.contains("trials") ? to_u64(s.config["trials"], "trials")
                                                     : default_trials);
  if (s.trials == 0) throw ConfigError("trials must be at least 1");
  s.seed = o.seed ? *o.seed : (s.config.contains("seed") ? to_u64(s.config["seed"], "seed") : 0);
  s.exec = o.serial ? Execution::Serial : Execution::Parallel;
  return s;
}

Report dispatch(const Options& o) {
  if (o.command == "verify-axioms") return verify_axioms(resolve(o, 1000));
  if (o.command == "isotopy") return isotopy(resolve(o, 1000));
  if (o.which == "trans") return lemma_trans(resolve(o, 200));
  if (o.which == "springer") return lemma_springer(resolve(o, 100));
  return lemma_discr(resolve(o, 1));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification workbench for cubic Jordan algebras", "albert-kit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "Ground field: Q or Fp:<p>");
  app.add_option("--config", o.config_path, "JSON run configuration");
  app.add_option("--trials", o.trials, "Samples per randomized check");
  app.add_option("--seed", o.seed, "Seed (64-bit)");
  app.add_option("--out", o.out_path, "Write the JSON report here instead of stdout");
  app.add_flag("--serial", o.serial, "Use the serial reference path instead of OpenMP");
  auto* axioms = app.add_subcommand("verify-axioms", "Quadratic and cubic Jordan axiom suites");
  auto* lemma = app.add_subcommand("lemma", "Replay one of the lemmas: trans, springer, discr");
  lemma->add_option("which", o.which, "trans | springer | discr")
      ->required()
      ->check(CLI::IsMember({"trans", "springer", "discr"}));
  auto* iso = app.add_subcommand("isotopy", "Isotope axioms and autotopy checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "albert-kit: " << e.what() << "\n";
    return kConfigError;
  }
  for (auto* sc : {axioms, lemma, iso})
    if (sc->parsed()) o.command = sc->get_name();

  Report report;
  try {
    report = dispatch(o);
  } catch (const Error& e) {
    err << "albert-kit: error: " << e.what() << "\n";
    return kConfigError;
  }

  const std::string text = report.to_json(utc_timestamp()).dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!(f << text)) {
      err << "albert-kit: error: cannot write '" << o.out_path << "'\n";
      return kConfigError;
    }
    out << (report.ok() ? "PASS" : "FAIL") << ": " << report.checks.size() << " checks, report in "
        << o.out_path << "\n";
  }
  return report.ok() ? kPass : kFail;
}

}  // namespace albert::cli
