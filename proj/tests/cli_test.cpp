#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "albert/report.hpp"

namespace albert {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_config(const std::string& name, const json& j) {
  const fs::path p = fs::temp_directory_path() / ("albert_cli_" + name + ".json");
  std::ofstream(p) << j.dump();
  return p.string();
}

json without_timestamp(json j) {
  j.erase("timestamp");
  return j;
}

TEST(Cli, VerifyAxiomsPasses) {
  const auto r = run({"verify-axioms", "--trials", "20", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["schema"], "albert-kit/1");
  EXPECT_EQ(j["config"]["field"], "Fp:2147483647");
  EXPECT_EQ(j["config"]["jordan"]["algebra"], "mat3");
}

TEST(Cli, MutatedModelFailsWithWitness) {
  const auto cfg = write_config(
      "mutation", {{"field", "Fp:101"},
                   {"jordan", {{"algebra", {{"kind", "split"}}}, {"lambda", "3"}}},
                   {"mutation", {{"output", 0}, {"i", 1}, {"j", 5}, {"delta", "2"}}},
                   {"trials", 50}});
  const auto r = run({"verify-axioms", "--config", cfg});
  ASSERT_EQ(r.code, 1) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["verdict"], "FAIL");
  bool witness = false;
  for (const auto& c : j["checks"])
    if (!c["passed"].get<bool>()) witness |= c.contains("witness");
  EXPECT_TRUE(witness);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"verify-axioms", "--field", "F7"}).code, 2);
  EXPECT_EQ(run({"verify-axioms", "--field", "Fp:8"}).code, 2);
  EXPECT_EQ(run({"verify-axioms", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"lemma", "nope"}).code, 2);
  EXPECT_EQ(run({"verify-axioms", "--config", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(run({"verify-axioms", "--config", write_config("bad_kind", {{"jordan", {{"algebra", {{"kind", "octonion"}}}}}})}).code, 2);
  EXPECT_EQ(run({"verify-axioms", "--config", write_config("zero_lambda", {{"jordan", {{"lambda", "0"}}}})}).code, 2);
  // lemma trans needs a commutative algebra; lemma discr needs a finite field.
  EXPECT_EQ(run({"lemma", "trans", "--config", write_config("trans_mat3", {{"jordan", {{"algebra", {{"kind", "mat3"}}}}}})}).code, 2);
  EXPECT_EQ(run({"lemma", "discr", "--field", "Q"}).code, 2);
  // Singular isotope parameter.
  EXPECT_EQ(run({"isotopy", "--config", write_config("iso_zero", {{"field", "Q"}, {"jordan", {{"algebra", {{"kind", "split"}}}}}, {"v", json(std::vector<std::string>(9, "0"))}})}).code, 2);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, LemmaTrans) {
  const auto r = run({"lemma", "trans", "--field", "Q", "--trials", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["checks"].size(), 2u);
}

TEST(Cli, LemmaDiscrTable) {
  const auto r = run({"lemma", "discr", "--field", "Fp:7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["checks"].size(), 4u);
  const auto& q = j["checks"][1]["details"]["q_E"];
  EXPECT_EQ(q["rank"], "8");
  EXPECT_EQ(q["disc"], "square");
  EXPECT_EQ(q["witt_index"], "4");
}

TEST(Cli, LemmaSpringerReportsLambdaPrime) {
  const auto cfg = write_config(
      "springer9", {{"field", "Q"},
                    {"jordan", {{"algebra", {{"kind", "split"}}}, {"lambda", "5"}}},
                    {"v", {"0", "0", "0", "1", "1", "1", "0", "0", "0"}},
                    {"trials", 20}});
  const auto r = run({"lemma", "springer", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["config"]["v"][0]["lambda_prime"], "5");
}

TEST(Cli, IsotopyWordsAndMaps) {
  std::vector<std::vector<std::string>> bad(9, std::vector<std::string>(9, "0"));
  for (int i = 0; i < 9; ++i) bad[i][i] = "1";
  bad[0][4] = "1";  // a shear, not in the structure group
  const auto cfg = write_config(
      "iso", {{"field", "Q"},
              {"jordan", {{"algebra", {{"kind", "split"}}}}},
              {"words", {json::array({{{"scalar", "2"}}})}},
              {"maps", {bad}},
              {"trials", 20},
              {"samples", 8}});
  const auto r = run({"isotopy", "--config", cfg});
  EXPECT_EQ(r.code, 1) << r.err;
  const auto j = r.report();
  int failures = 0;
  for (const auto& c : j["checks"]) {
    const std::string name = c["name"];
    if (name.rfind("map[0]", 0) == 0) {
      EXPECT_FALSE(c["passed"].get<bool>());
      EXPECT_TRUE(c.contains("witness"));
      ++failures;
    } else {
      EXPECT_TRUE(c["passed"].get<bool>()) << name;
    }
  }
  EXPECT_EQ(failures, 1);
}

TEST(Cli, DeterministicAndScheduleIndependent) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-axioms", "--trials", "15", "--seed", "9"},
           {"lemma", "springer", "--trials", "10", "--seed", "3"},
           {"isotopy", "--trials", "10", "--seed", "3"}}) {
    const auto a = run(args), b = run(args);
    auto serial_args = args;
    serial_args.push_back("--serial");
    const auto c = run(serial_args);
    EXPECT_EQ(without_timestamp(a.report()).dump(), without_timestamp(b.report()).dump());
    EXPECT_EQ(without_timestamp(a.report()).dump(), without_timestamp(c.report()).dump());
  }
}

TEST(Cli, OutFile) {
  const fs::path p = fs::temp_directory_path() / "albert_cli_out.json";
  fs::remove(p);
  const auto r = run({"lemma", "trans", "--trials", "5", "--out", p.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(p);
  EXPECT_EQ(json::parse(in)["verdict"], "PASS");
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace albert
