// Acceptance suite: one pass/fail line per criterion, exit status 1 if any
// criterion fails.

#include <CLI11.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "golden.hpp"
#include "kring/characters.hpp"
#include "kring/kmodel.hpp"
#include "kring/lambda_axioms.hpp"
#include "kring/oracle/character_table.hpp"
#include "kring/tau.hpp"
#include "kring/tau_axioms.hpp"
#include "kring/wreath.hpp"
#include "mackey.hpp"
#include "monomial.hpp"
#include "wreath_bridge.hpp"

using namespace kring;
using namespace kring::testing;

namespace {

// Collects failed sub-checks; a criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failed_ > 0) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const Partition& p) { return p.to_string(); }

// ---- 1 ---------------------------------------------------------------------

// Partitions of n with parts at most `largest`, counted by recursion alone.
long brute_partition_count(int n, int largest) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, largest); part >= 1; --part) total += brute_partition_count(n - part, part);
  return total;
}

void free_on_one_generator(Checks& c) {
  const FreeModel one({Cell{"x", 0, false, false}});
  for (int n = 0; n <= 8; ++n) {
    const long brute = brute_partition_count(n, n);
    c.expect(one.rank(n) == brute, "rank at n=" + std::to_string(n));
    c.expect(static_cast<long>(partitions_of(n).size()) == brute, "enumerator at n=" + std::to_string(n));
    c.expect(static_cast<long>(one.monomial_labels(n).size()) == brute, "monomials at n=" + std::to_string(n));
  }
  c.expect(brute_partition_count(8, 8) == 22, "p(8) = 22");
  for (int n = 1; n <= 7; ++n) {
    const auto m = monomial_to_schur_matrix(n);
    c.expect(m.size() == partitions_of(n).size(), "square at n=" + std::to_string(n));
    const Integer d = determinant(m);
    c.expect(d == 1 || d == -1, "det at n=" + std::to_string(n) + " is " + d.get_str());
  }
}

// ---- 2 ---------------------------------------------------------------------

void lambda_axioms(Checks& c) {
  const auto integers = check_lambda_axioms(integer_instance(6), LambdaBudget{3, 3});
  c.expect(integers.ok() && integers.checked() > 0, "integer instance: " + std::to_string(integers.failed()) + " failed");
  const FreeModel two({Cell{"x", 0, false, false}, Cell{"y", 2, false, false}});
  const auto model = check_lambda_axioms(two.instance(3, 4), LambdaBudget{2, 2});
  c.expect(model.ok() && model.checked() > 0, "two-generator model: " + std::to_string(model.failed()) + " failed");
  for (const char* axiom : {"(i)", "(ii)", "(iii)", "(iv)"}) {
    bool seen = false;
    for (const auto& [name, tally] : model.tallies()) seen = seen || (name.find(axiom) != std::string::npos && tally.checked > 0);
    c.expect(seen, std::string("model covers ") + axiom);
  }
}

// ---- 3 ---------------------------------------------------------------------

void tau_axioms(Checks& c) {
  const TauBudget budget;
  const auto report = check_tau_axioms(budget);
  c.expect(report.ok(), "tau suite: " + std::to_string(report.failed()) + " failed");
  for (const char* axiom : {"1 ", "2 ", "3 ", "4 ", "5 "}) {
    bool seen = false;
    for (const auto& [name, tally] : report.tallies()) seen = seen || (name.rfind(axiom, 0) == 0 && tally.checked > 0);
    c.expect(seen, std::string("suite covers axiom ") + axiom);
  }

  // Every wreath quantity used by axiom 5, recomputed on permutation groups.
  for (const auto& [l, k] : budget.wreath_blocks) {
    const std::string at = " at " + std::to_string(l) + "," + std::to_string(k);
    const auto& w = oracle::wreath_table(l, k);
    std::set<MultiPartition, MultiPartitionOrder> matched;
    for (const auto& chi : w.characters)
      if (auto phi = match_irreducible(chi, l, k)) matched.insert(*phi);
    c.expect(matched.size() == multipartitions(l, k).size() && w.characters.size() == matched.size(), "table" + at);

    for (const auto& v : partitions_of(l)) {
      const auto chi = oracle::power_character(oracle_symmetric_character(v), *w.group, k);
      c.expect(decompose_on_oracle(chi, l, k) == power_map(RepSn::irreducible(v), k), "power of " + str(v) + at);
    }
    for (const auto& mu : partitions_of(k)) {
      const auto chi = oracle::pullback_character(oracle_symmetric_character(mu), *w.group, k);
      c.expect(decompose_on_oracle(chi, l, k) == pullback(RepSn::irreducible(mu), l), "pullback of " + str(mu) + at);
    }
    const auto& slk = *oracle::symmetric_table(l * k).group;
    for (const auto& phi : multipartitions(l, k))
      c.expect(decompose_symmetric(oracle::induce(oracle_wreath_character(phi), slk)) ==
                   wreath_induce(WreathRep::irreducible(phi)),
               "induce " + phi.to_string());
    for (const auto& nu : partitions_of(l * k))
      c.expect(decompose_on_oracle(oracle::restrict_to(oracle_symmetric_character(nu), *w.group), l, k) ==
                   wreath_restrict(RepSn::irreducible(nu), l, k),
               "restrict " + str(nu) + at);

    // Both sides of the square at this block, against the oracle restriction
    // of the level-lk components of tau.
    for (int d = 1; d <= budget.wreath_max_degree; ++d)
      for (const auto& lambda : partitions_of(d)) {
        const auto t = tau(SymFunc::schur(lambda), l * k);
        MultiPartitionMap<SymFunc> expected;
        for (const auto& [mu, f] : t.component(l * k)) {
          const auto res = decompose_on_oracle(oracle::restrict_to(oracle_symmetric_character(mu), *w.group), l, k);
          for (const auto& [phi, m] : res.coeffs()) {
            auto [it, fresh] = expected.try_emplace(phi, f * Rational(m));
            if (!fresh) it->second += f * Rational(m);
          }
        }
        std::erase_if(expected, [](const auto& e) { return e.second.is_zero(); });
        c.expect(box(t, {{l, k}}).block(l, k) == expected, "box of s" + str(lambda) + at);
        c.expect(tau_dot(t, {{l, k}}).block(l, k) == expected, "tau-dot of s" + str(lambda) + at);
      }
  }

  // tau components against diagonal induction on the oracle.
  for (int d = 1; d <= 2; ++d)
    for (const auto& v : partitions_of(d))
      for (int m = 1; d * m <= 6 && m <= 3; ++m) {
        const auto t = tau(SymFunc::schur(v), m);
        PartitionMap<RepSn> lib;
        for (const auto& [mu, f] : t.component(m)) lib.emplace(mu, ch_inverse(f, d * m));
        c.expect(lib == oracle_delta(v, m), "tau^" + std::to_string(m) + " of s" + str(v));
      }
}

// ---- 4 ---------------------------------------------------------------------

void closed_form(Checks& c) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& lambda : partitions_of(d))
      for (int n = 0; n <= 4; ++n)
        c.expect(lambda_from_tau(SymFunc::schur(lambda), n, 4) ==
                     plethysm(SymFunc::elementary({n}), SymFunc::schur(lambda)),
                 "lambda^" + std::to_string(n) + " of s" + str(lambda));
  const auto v = variables(4);
  const auto spot_s2 = schur_decompose(elementary(2, alphabet_of(homogeneous(2, v, 4)), 4), 4);
  const auto spot_s11 = schur_decompose(elementary(2, alphabet_of(elementary(2, v, 4)), 4), 4);
  c.expect(lambda_from_tau(SymFunc::schur({2}), 2, 4) == SymFunc::schur({3, 1}), "lambda^2(s2) = s31");
  c.expect(spot_s2 == SymFunc::schur({3, 1}).expand(Basis::schur).terms, "monomial oracle for lambda^2(s2)");
  c.expect(lambda_from_tau(SymFunc::schur({1, 1}), 2, 4) == SymFunc::schur({2, 1, 1}), "lambda^2(s11) = s211");
  c.expect(spot_s11 == SymFunc::schur({2, 1, 1}).expand(Basis::schur).terms, "monomial oracle for lambda^2(s11)");
}

// ---- 5 ---------------------------------------------------------------------

void rank_loop(Checks& c, const std::string& golden) {
  for (const char* name : {"cp1", "cp2", "cp1xcp1"}) {
    const auto cx = CellComplex::load(golden + "/cells/" + name + ".cells");
    for (int n = 0; n <= 6; ++n) {
      const auto row = rank_table(cx, n);
      const std::string at = std::string(name) + " N=" + std::to_string(n);
      c.expect(row.row_sum() == row.total, "row sum " + at);
      c.expect(row.total == free_rank(static_cast<int>(cx.cells().size()), n), "total " + at);
    }
  }
  const auto row = rank_table(CellComplex::load(golden + "/cells/cp1.cells"), 2);
  c.expect(row.entries == std::vector<Integer>{2, 1, 2} && row.total == 5, "cp1 N=2 is 2+1+2 = 5");
}

// ---- 6 ---------------------------------------------------------------------

void oracle_equivalence(Checks& c) {
  for (int n = 1; n <= 6; ++n) {
    const auto& t = oracle::symmetric_table(n);
    std::set<Partition> hit;
    for (const auto& chi : t.characters)
      for (const auto& lambda : partitions_of(n)) {
        bool same = true;
        for (const auto& cls : t.group->classes())
          same = same && chi.at(cls.representative) == oracle::Value(mn_character(lambda, cycle_type_of(cls.representative)));
        if (same) hit.insert(lambda);
      }
    c.expect(hit.size() == partitions_of(n).size() && t.characters.size() == hit.size(), "S_" + std::to_string(n));
  }
  for (auto [l, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto& t = oracle::wreath_table(l, k);
    std::set<MultiPartition, MultiPartitionOrder> hit;
    for (const auto& chi : t.characters)
      if (auto phi = match_irreducible(chi, l, k)) hit.insert(*phi);
    c.expect(hit.size() == multipartitions(l, k).size() && t.characters.size() == hit.size(),
             "S_" + std::to_string(l) + " wr S_" + std::to_string(k));
  }

  auto reciprocity = [&](const oracle::PermGroup& h, const std::vector<oracle::ClassFunction>& chars, int n,
                         const std::string& what) {
    const auto& t = oracle::symmetric_table(n);
    for (const auto& f : chars) {
      const auto up = oracle::induce(f, *t.group);
      for (const auto& chi : t.characters)
        c.expect(oracle::inner(up, chi) == oracle::inner(f, oracle::restrict_to(chi, h)), "reciprocity " + what);
    }
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 6; ++j) {
      const auto young = oracle::build_young(i, j);
      std::vector<oracle::ClassFunction> chars;
      for (const auto& a : partitions_of(i))
        for (const auto& b : partitions_of(j)) chars.push_back(young_character(young, a, b));
      reciprocity(young, chars, i + j, "S_" + std::to_string(i) + " x S_" + std::to_string(j));
    }
  for (auto [l, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto& t = oracle::wreath_table(l, k);
    reciprocity(*t.group, t.characters, l * k, "S_" + std::to_string(l) + " wr S_" + std::to_string(k));
  }

  // l = 6 would need S_6 x S_6, past the oracle's element guard.
  Rng rng(0x5eed0602);
  for (int l = 2; l <= 5; ++l)
    for (int n = 1; n * l <= 6; ++n)
      for (int i = 1; i < l; ++i) {
        const auto r = mackey_instance(n, i, l - i, rng);
        const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(l - i);
        c.expect(r.intersection_order_ok, "Mackey intersection " + at);
        c.expect(r.identity_ok, "Mackey " + at);
      }
}

// ---- 7 ---------------------------------------------------------------------

void excision(Checks& c, const std::string& golden) {
  for (const char* name : {"excision_identity", "excision_points", "excision_cp2"}) {
    const auto report = excision_check(CellComplex::load(golden + "/cells/" + name + ".cells"), 6);
    c.expect(report.ok() && report.checked() > 0, name);
  }
}

// ---- 8 ---------------------------------------------------------------------

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

// Runs one command in its own process; stdout is captured, stderr discarded.
std::pair<int, std::string> run_cli(const std::string& cli, const std::vector<std::string>& args) {
  std::string command = shell_quote(cli);
  for (const auto& a : args) command += " " + shell_quote(a);
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  for (std::size_t got; (got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_golden(Checks& c, const std::string& cli, const std::string& golden) {
  const auto corpus = load_corpus(golden);
  c.expect(!corpus.empty(), "corpus is not empty");
  for (const auto& g : corpus) {
    const auto [code, out] = run_cli(cli, g.args);
    c.expect(code == g.exit_code, g.id + " exit " + std::to_string(code));
    c.expect(out == read_file(expected_path(golden, g)), g.id + " output");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli, golden;
  app.add_option("--cli", cli, "Path to the kring binary")->required();
  app.add_option("--golden", golden, "Golden directory (cells and CLI corpus)")->required();
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Checks&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "free lambda-ring on one generator", 10, free_on_one_generator},
      {2, "lambda-ring axioms", 60, lambda_axioms},
      {3, "tau-ring axioms with oracle confirmation", 300, tau_axioms},
      {4, "lambda^n from tau equals e_n plethysm", 60, closed_form},
      {5, "filtration rank loop", 5, [&](Checks& c) { rank_loop(c, golden); }},
      {6, "oracle equivalence", 300, oracle_equivalence},
      {7, "excision", 60, [&](Checks& c) { excision(c, golden); }},
      {8, "CLI golden corpus", 300, [&](Checks& c) { cli_golden(c, cli, golden); }},
  };

  bool all = true;
  for (const auto& k : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(seconds < k.limit_seconds, "runtime limit " + std::to_string(static_cast<int>(k.limit_seconds)) + " s");
    all = all && checks.ok();
    std::cout << "criterion " << k.id << " " << (checks.ok() ? "PASS" : "FAIL") << "  " << k.title << "  ("
              << checks.summary() << ", " << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
