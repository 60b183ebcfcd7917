#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "kring/rep_sn.hpp"
#include "kring/sym_format.hpp"
#include "kring/symfunc.hpp"
#include "kring/wreath.hpp"

using namespace kring;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cells(const std::string& name) { return std::string(KRING_GOLDEN_DIR) + "/cells/" + name; }

}  // namespace

TEST(Cli, PlethysmExample) {
  const auto r = run({"plethysm", "e[2]", "e[2]"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "s[2,1,1]\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, LambdaOneIsIdentity) {
  const auto r = run({"lambda", "1", "s[5]"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "s[5]\n");
  EXPECT_EQ(run({"lambda", "2", "s[2]"}).out, "s[3,1]\n");
}

TEST(Cli, RankTableExample) {
  const auto r = run({"kx-rank", cells("cp1.cells"), "--max", "2"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("N=2: total 5  split 2,1,2  sum 5"), std::string::npos) << r.out;
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(run({}).code, cli::argument_error);
  EXPECT_EQ(run({"bogus"}).code, cli::argument_error);
  EXPECT_EQ(run({"plethysm", "e[2]"}).code, cli::argument_error);
  const auto parse = run({"plethysm", "s[", "e[2]"});
  EXPECT_EQ(parse.code, cli::argument_error);
  EXPECT_NE(parse.err.find("offset"), std::string::npos);
  EXPECT_EQ(run({"mult", "s[1]", "s[1]", "--basis", "q"}).code, cli::argument_error);
  EXPECT_EQ(run({"char", "[2,1]", "[2]"}).code, cli::argument_error);
  EXPECT_EQ(run({"char-table", "A5"}).code, cli::argument_error);
  EXPECT_EQ(run({"axioms", "mu"}).code, cli::argument_error);
  EXPECT_EQ(run({"kx-rank", cells("missing.cells"), "--max", "2"}).code, cli::argument_error);
}

TEST(Cli, CapIsEnforced) {
  const auto r = run({"plethysm", "s[7]", "s[2]"});
  EXPECT_EQ(r.code, cli::argument_error);
  EXPECT_NE(r.err.find("--cap"), std::string::npos);
  EXPECT_EQ(run({"--cap", "14", "plethysm", "s[7]", "s[1]"}).code, cli::ok);
  EXPECT_EQ(run({"--cap", "3", "lambda", "2", "s[2]"}).code, cli::argument_error);
  EXPECT_EQ(run({"--cap", "3", "char-table", "S4"}).code, cli::argument_error);
}

TEST(Cli, OddCellsAreRejected) {
  const auto r = run({"kx-rank", cells("odd.cells"), "--max", "2"});
  EXPECT_EQ(r.code, cli::argument_error);
  EXPECT_NE(r.err.find("even"), std::string::npos);
}

TEST(Cli, IntegralityFailureIsAnInvariantViolation) {
  EXPECT_EQ(run({"lambda", "2", "1/2*p[2]"}).code, cli::invariant_violation);
  EXPECT_EQ(run({"tau", "1/2*p[1]", "--max", "2"}).code, cli::invariant_violation);
  EXPECT_EQ(run({"schur-expand", "1/2*p[2]"}).out, "1/2*s[2] - 1/2*s[1,1]\n");
}

TEST(Cli, AxiomSuites) {
  EXPECT_EQ(run({"axioms", "lambda", "--budget", "2"}).code, cli::ok);
  const auto broken = run({"axioms", "lambda", "--broken"});
  EXPECT_EQ(broken.code, cli::axiom_violation);
  EXPECT_NE(broken.out.find("violation of [broken]"), std::string::npos);
  const auto tau = run({"--json", "axioms", "tau", "--budget", "1"});
  EXPECT_EQ(tau.code, cli::ok);
  EXPECT_EQ(nlohmann::json::parse(tau.out)["failed"], 0);
}

TEST(Cli, OutputParsesBack) {
  const auto text = run({"plethysm", "s[2]", "s[2]"});
  EXPECT_EQ(parse_symfunc(text.out.substr(0, text.out.size() - 1)), plethysm(SymFunc::schur({2}), SymFunc::schur({2})));
  const auto j = run({"--json", "kron", "s[2,1]", "s[2,1]"});
  EXPECT_EQ(symfunc_from_json(nlohmann::json::parse(j.out)), kronecker(SymFunc::schur({2, 1}), SymFunc::schur({2, 1})));
  const auto induced = run({"wreath-induce", "2", "2", "{[2]->[2]}"});
  ASSERT_EQ(induced.code, cli::ok) << induced.err;
  EXPECT_EQ(parse_rep(induced.out.substr(0, induced.out.size() - 1)),
            RepSn::irreducible({4}) + RepSn::irreducible({2, 2}));
  const auto restricted = run({"--json", "wreath-restrict", "2", "2", "[4]"});
  EXPECT_EQ(wreath_rep_from_json(nlohmann::json::parse(restricted.out)),
            wreath_restrict(RepSn::irreducible({4}), 2, 2));
}

TEST(Cli, CharacterTablesAgreeAcrossSources) {
  const auto oracle = run({"--json", "char-table", "S2wrS2"});
  const auto comb = run({"--json", "char-table", "S2wrS2", "--source", "combinatorial"});
  ASSERT_EQ(oracle.code, cli::ok);
  ASSERT_EQ(comb.code, cli::ok);
  // Class orders differ between the sources, so compare each row as a sorted
  // value list.
  auto rows = [](const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::multiset<std::vector<long>> out;
    for (const auto& r : j["rows"]) {
      std::vector<long> values;
      for (const auto& v : r["values"]) values.push_back(std::stol(v.get<std::string>()));
      std::sort(values.begin(), values.end());
      out.insert(values);
    }
    return out;
  };
  EXPECT_EQ(rows(oracle.out), rows(comb.out));
  EXPECT_EQ(rows(oracle.out).size(), 5u);
  EXPECT_EQ(rows(oracle.out).count({-2, 0, 0, 0, 2}), 1u);
}

TEST(Cli, RepeatedRunsAreIdentical) {
  const std::vector<std::vector<std::string>> corpus = {
      {"tau", "s[2]", "--max", "3"},
      {"box", "s[1]", "--l", "2", "--k", "2"},
      {"--json", "kx-rank", cells("cp2.cells"), "--max", "3"},
      {"universal-q", "2", "3"},
      {"excision", cells("excision_cp2.cells"), "--max", "4"},
  };
  for (const auto& args : corpus) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, cli::ok) << args[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}
