#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include "kring/characters.hpp"
#include "kring/kmodel.hpp"
#include "kring/lambda_axioms.hpp"
#include "kring/oracle/character_table.hpp"
#include "kring/rep_sn.hpp"
#include "kring/sym_format.hpp"
#include "kring/tau.hpp"
#include "kring/tau_axioms.hpp"
#include "kring/universal.hpp"
#include "kring/wreath.hpp"

namespace kring::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  int cap = 12;
};

void check_degree(int degree, const Options& opt, const std::string& what) {
  if (degree > opt.cap)
    throw CapError(what + " has degree " + std::to_string(degree) + ", above the cap " + std::to_string(opt.cap) +
                   " (raise it with --cap)");
}

SymFunc read_symfunc(const std::string& text, const Options& opt, const std::string& what) {
  SymFunc f = parse_symfunc(text);
  check_degree(std::max(0, f.max_degree()), opt, what);
  return f;
}

Basis read_basis(const std::string& letter) {
  if (letter.size() == 1)
    if (auto b = basis_from_letter(letter[0])) return *b;
  throw ParseError("unknown basis `" + letter + "` (expected one of m, e, h, p, s)");
}

void emit_symfunc(std::ostream& out, const Options& opt, const SymFunc& f, Basis b = Basis::schur) {
  if (opt.json)
    out << symfunc_to_json(f, b).dump(2) << "\n";
  else
    out << format_symfunc(f, b) << "\n";
}

json series_to_json(const TauSeries<SymFunc>& s) {
  json components = json::array();
  for (int m = 0; m <= s.cap(); ++m) {
    json terms = json::array();
    for (const auto& [mu, f] : s.component(m))
      terms.push_back({{"representation", partition_to_json(mu)}, {"value", symfunc_to_json(f)}});
    components.push_back({{"m", m}, {"terms", terms}});
  }
  return {{"cap", s.cap()}, {"components", components}};
}

json tau_q_to_json(const TauQ<SymFunc>& q) {
  json blocks = json::array();
  for (const auto& [lk, block] : q.blocks()) {
    json terms = json::array();
    for (const auto& [phi, f] : block)
      terms.push_back({{"multipartition", multipartition_to_json(phi)}, {"value", symfunc_to_json(f)}});
    blocks.push_back({{"l", lk.first}, {"k", lk.second}, {"terms", terms}});
  }
  return {{"cap", q.cap()}, {"blocks", blocks}};
}

// ---------------------------------------------------------------------------
// Character tables

struct TableView {
  std::string title;
  std::vector<std::string> class_labels;
  std::vector<std::string> class_sizes;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;
};

std::string render_table(const TableView& t) {
  std::size_t label_width = 0;
  for (const auto& r : t.row_labels) label_width = std::max(label_width, r.size());
  label_width = std::max<std::size_t>(label_width, 5);
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < t.class_labels.size(); ++j) {
    std::size_t w = std::max(t.class_labels[j].size(), t.class_sizes[j].size());
    for (const auto& row : t.cells) w = std::max(w, row[j].size());
    widths.push_back(w);
  }
  std::ostringstream os;
  os << t.title << "\n";
  auto line = [&](const std::string& head, const std::vector<std::string>& cols) {
    os << std::left << std::setw(static_cast<int>(label_width)) << head;
    for (std::size_t j = 0; j < cols.size(); ++j) os << "  " << std::right << std::setw(static_cast<int>(widths[j])) << cols[j];
    os << "\n";
  };
  line("class", t.class_labels);
  line("size", t.class_sizes);
  for (std::size_t i = 0; i < t.cells.size(); ++i) line(t.row_labels[i], t.cells[i]);
  return os.str();
}

json table_to_json(const TableView& t, const std::string& group, const std::string& source) {
  json classes = json::array();
  for (std::size_t j = 0; j < t.class_labels.size(); ++j)
    classes.push_back({{"label", t.class_labels[j]}, {"size", t.class_sizes[j]}});
  json rows = json::array();
  for (std::size_t i = 0; i < t.cells.size(); ++i) rows.push_back({{"label", t.row_labels[i]}, {"values", t.cells[i]}});
  return {{"group", group}, {"source", source}, {"classes", classes}, {"rows", rows}};
}

std::string list_text(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::string cycle_notation(const oracle::Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (seen[a] || p[a] == static_cast<int>(a)) continue;
    s += "(";
    for (std::size_t x = a; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      s += (x == a ? "" : " ") + std::to_string(x + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

TableView oracle_view(const oracle::PermGroup& g, const std::vector<oracle::ClassFunction>& chars,
                      std::vector<std::string> row_labels, bool label_by_cycle_type) {
  TableView t;
  for (std::size_t j = 0; j < g.classes().size(); ++j) {
    const auto& c = g.classes()[j];
    t.class_labels.push_back(label_by_cycle_type ? list_text(oracle::cycle_type(c.representative))
                                                 : cycle_notation(c.representative));
    t.class_sizes.push_back(std::to_string(c.size));
  }
  for (const auto& chi : chars) {
    std::vector<std::string> row;
    for (const auto& v : chi.values()) row.push_back(v.get_str());
    t.cells.push_back(row);
  }
  t.row_labels = std::move(row_labels);
  return t;
}

int char_table(const std::string& spec, const std::string& source, const Options& opt, std::ostream& out) {
  std::smatch m;
  const std::regex symmetric(R"(S_?(\d+))"), wreath(R"(S_?(\d+)\s*wr\s*S_?(\d+))");
  TableView view;
  std::string group;
  if (std::regex_match(spec, m, wreath)) {
    const int l = std::stoi(m[1]), k = std::stoi(m[2]);
    if (l < 1 || k < 1) throw std::invalid_argument("char-table: l and k must be positive");
    check_degree(l * k, opt, "group " + spec);
    group = "S_" + std::to_string(l) + " wr S_" + std::to_string(k);
    if (source == "oracle") {
      const auto& t = oracle::wreath_table(l, k);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < t.characters.size(); ++i) labels.push_back("chi" + std::to_string(i + 1));
      view = oracle_view(*t.group, t.characters, labels, false);
    } else {
      const auto& t = wreath_character_table(l, k);
      const Integer order = wreath_order(l, k);
      for (std::size_t j = 0; j < t.classes.size(); ++j) {
        view.class_labels.push_back(t.classes[j].to_string());
        view.class_sizes.push_back(Integer(order / t.centralizers[j]).get_str());
      }
      for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
        view.row_labels.push_back(t.irreducibles[i].to_string());
        std::vector<std::string> row;
        for (const auto& v : t.values[i]) row.push_back(v.get_str());
        view.cells.push_back(row);
      }
    }
  } else if (std::regex_match(spec, m, symmetric)) {
    const int n = std::stoi(m[1]);
    if (n < 1) throw std::invalid_argument("char-table: n must be positive");
    check_degree(n, opt, "group " + spec);
    group = "S_" + std::to_string(n);
    if (source == "oracle") {
      const auto& t = oracle::symmetric_table(n);
      std::vector<std::string> labels;
      for (const auto& l : t.labels) labels.push_back(list_text(l));
      view = oracle_view(*t.group, t.characters, labels, true);
    } else {
      const auto& t = character_table(n);
      const Integer order = factorial(n);
      for (const auto& rho : t.partitions) {
        view.class_labels.push_back(rho.to_string());
        view.class_sizes.push_back(Integer(order / rho.z()).get_str());
      }
      for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        view.row_labels.push_back(t.partitions[i].to_string());
        std::vector<std::string> row;
        for (const auto& v : t.values[i]) row.push_back(v.get_str());
        view.cells.push_back(row);
      }
    }
  } else {
    throw ParseError("unknown group `" + spec + "` (expected S<n> or S<l>wrS<k>)");
  }
  view.title = group + " (" + source + ")";
  if (opt.json)
    out << table_to_json(view, group, source).dump(2) << "\n";
  else
    out << render_table(view);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric-function, lambda-ring and tau-ring calculator", "kring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit structured records instead of text");
  app.add_option("--cap", opt.cap, "Degree cap for graded computations")->check(CLI::NonNegativeNumber);
  std::function<int()> action;

  std::string f_text, g_text, basis_letter = "s";
  std::string lambda_text, mu_text, nu_text;
  int n = 0, m = 0, l = 0, k = 0, budget = 0;
  std::string path, spec, source = "oracle";
  bool broken = false;

  auto binary = [&](const std::string& name, const std::string& help, std::function<SymFunc(const SymFunc&, const SymFunc&)> op,
                    std::function<int(int, int)> degree) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("f", f_text, "Left argument, e.g. s[2,1]")->required();
    sub->add_option("g", g_text, "Right argument")->required();
    sub->add_option("--basis", basis_letter, "Output basis (m, e, h, p, s)");
    sub->callback([&, op, degree, name] {
      action = [&, op, degree, name] {
        SymFunc f = read_symfunc(f_text, opt, "f");
        SymFunc g = read_symfunc(g_text, opt, "g");
        check_degree(degree(std::max(0, f.max_degree()), std::max(0, g.max_degree())), opt, name + " result");
        emit_symfunc(out, opt, op(f, g), read_basis(basis_letter));
        return ok;
      };
    });
  };
  binary("plethysm", "Plethysm f o g", [](const SymFunc& f, const SymFunc& g) { return plethysm(f, g); },
         [](int a, int b) { return a * b; });
  binary("mult", "Product f g", [](const SymFunc& f, const SymFunc& g) { return multiply(f, g); },
         [](int a, int b) { return a + b; });
  binary("kron", "Kronecker (internal) product f * g", [](const SymFunc& f, const SymFunc& g) { return kronecker(f, g); },
         [](int a, int b) { return std::max(a, b); });

  {
    auto* sub = app.add_subcommand("schur-expand", "Expand f in a basis (Schur by default)");
    sub->add_option("f", f_text, "Symmetric function")->required();
    sub->add_option("--basis", basis_letter, "Target basis (m, e, h, p, s)");
    sub->callback([&] {
      action = [&] {
        emit_symfunc(out, opt, read_symfunc(f_text, opt, "f"), read_basis(basis_letter));
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("char", "Irreducible character value chi^lambda(mu)");
    sub->add_option("lambda", lambda_text, "Irreducible, e.g. [2,1]")->required();
    sub->add_option("mu", mu_text, "Cycle type")->required();
    sub->callback([&] {
      action = [&] {
        Partition lambda = parse_partition(lambda_text), mu = parse_partition(mu_text);
        check_degree(lambda.size(), opt, "lambda");
        Integer v = mn_character(lambda, mu);
        if (opt.json)
          out << json{{"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)}, {"value", integer_to_json(v)}}.dump(2)
              << "\n";
        else
          out << v << "\n";
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lr", "Littlewood-Richardson expansion of s_lambda s_mu, or one coefficient");
    sub->add_option("lambda", lambda_text, "First partition")->required();
    sub->add_option("mu", mu_text, "Second partition")->required();
    sub->add_option("nu", nu_text, "Target partition: print only c^nu_{lambda mu}");
    sub->callback([&] {
      action = [&] {
        Partition lambda = parse_partition(lambda_text), mu = parse_partition(mu_text);
        check_degree(lambda.size() + mu.size(), opt, "lr product");
        if (!nu_text.empty()) {
          Integer c = lr_coefficient(lambda, mu, parse_partition(nu_text));
          if (opt.json)
            out << json{{"coefficient", integer_to_json(c)}}.dump(2) << "\n";
          else
            out << c << "\n";
          return ok;
        }
        Expansion e{Basis::schur, {}};
        for (const auto& [p, c] : lr_product(lambda, mu)) e.terms.emplace(p, Rational(c));
        emit_symfunc(out, opt, SymFunc::from_expansion(e));
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lambda", "lambda^n(f) = g_n(tau(f))");
    sub->add_option("n", n, "Exponent")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("f", f_text, "Element")->required();
    sub->callback([&] {
      action = [&] {
        SymFunc f = read_symfunc(f_text, opt, "f");
        check_degree(n * std::max(0, f.max_degree()), opt, "lambda^n(f)");
        emit_symfunc(out, opt, lambda_from_tau(f, n, opt.cap));
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("tau", "The series tau(f) up to level --max");
    sub->add_option("f", f_text, "Element")->required();
    sub->add_option("--max", m, "Highest level")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      action = [&] {
        SymFunc f = read_symfunc(f_text, opt, "f");
        check_degree(m, opt, "level --max");
        auto s = tau(f, m);
        if (opt.json)
          out << series_to_json(s).dump(2) << "\n";
        else
          out << format_series(s);
        return ok;
      };
    });
  }
  for (const std::string name : {"taudot", "box"}) {
    auto* sub = app.add_subcommand(name, name == "box" ? "box(tau(f)) at one (l,k) block"
                                                       : "tau-dot(tau(f)) at one (l,k) block");
    sub->add_option("f", f_text, "Element")->required();
    sub->add_option("--l", l, "Base group index l")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "Wreath index k")->required()->check(CLI::PositiveNumber);
    sub->callback([&, name] {
      action = [&, name] {
        SymFunc f = read_symfunc(f_text, opt, "f");
        check_degree(l * k, opt, "level lk");
        auto s = tau(f, l * k);
        auto q = name == "box" ? box(s, {{l, k}}) : tau_dot(s, {{l, k}});
        if (opt.json)
          out << tau_q_to_json(q).dump(2) << "\n";
        else
          out << format_tau_q(q);
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("wreath-induce", "Induce an irreducible of S_l wr S_k to S_lk");
    sub->add_option("l", l, "l")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("k", k, "k")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("phi", spec, "Multipartition, e.g. {[2]->[1],[1,1]->[1]}")->required();
    sub->callback([&] {
      action = [&] {
        check_degree(l * k, opt, "S_lk");
        RepSn r = wreath_induce(WreathRep::irreducible(parse_multipartition(spec, l, k)));
        out << (opt.json ? rep_to_json(r).dump(2) : format_rep(r)) << "\n";
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("wreath-restrict", "Restrict an irreducible of S_lk to S_l wr S_k");
    sub->add_option("l", l, "l")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("k", k, "k")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("nu", nu_text, "Partition of lk")->required();
    sub->callback([&] {
      action = [&] {
        check_degree(l * k, opt, "S_lk");
        WreathRep w = wreath_restrict(RepSn::irreducible(parse_partition(nu_text)), l, k);
        out << (opt.json ? wreath_rep_to_json(w).dump(2) : format_wreath_rep(w)) << "\n";
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("universal-p", "The polynomial p_k of the product axiom");
    sub->add_option("k", k, "k")->required()->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        check_degree(k, opt, "k");
        IntPolynomial p = universal_p(k);
        out << (opt.json ? p.to_json().dump(2) : p.to_string()) << "\n";
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("universal-q", "The polynomial q_{k,l} of the composition axiom");
    sub->add_option("k", k, "k")->required()->check(CLI::PositiveNumber);
    sub->add_option("l", l, "l")->required()->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        check_degree(k * l, opt, "kl");
        IntPolynomial q = universal_q(k, l);
        out << (opt.json ? q.to_json().dump(2) : q.to_string()) << "\n";
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("axioms", "Run an axiom suite: lambda or tau");
    sub->add_option("suite", spec, "lambda or tau")->required()->check(CLI::IsMember({"lambda", "tau"}));
    sub->add_option("--budget", budget, "Suite size: exponent bound (lambda) or input degree (tau)")
        ->check(CLI::Range(1, 4));
    // Self-test of the failure path: checks lambda^n(m) = m^n on the integers.
    sub->add_flag("--broken", broken)->group("");
    sub->callback([&] {
      action = [&] {
        AxiomReport report;
        if (broken) {
          auto inst = integer_instance(3);
          inst.name = "broken";
          inst.lambda = [](const Integer& x, int k) -> Integer {
            Integer out = 1;
            for (int i = 0; i < k; ++i) out *= x;
            return out;
          };
          report = check_lambda_axioms(inst, LambdaBudget{2, 2});
        } else if (spec == "lambda") {
          const int b = budget == 0 ? 3 : budget;
          report = check_lambda_axioms(integer_instance(6), LambdaBudget{b, b});
          const int small = std::min(b, 2);
          std::vector<SymFunc> samples;
          for (int d = 1; d <= 2; ++d)
            for (const auto& p : partitions_of(d)) samples.push_back(SymFunc::schur(p));
          report.merge(check_lambda_axioms(
              plethystic_instance<SymFunc>("Lambda", SymFunc::one(), samples,
                                           [](const SymFunc& a, const SymFunc& c) { return a.max_degree() + c.max_degree() <= 3; }),
              LambdaBudget{small, small}));
          FreeModel model({Cell{"x1", 0, false, false}, Cell{"x2", 2, false, false}});
          report.merge(check_lambda_axioms(model.instance(2, 2), LambdaBudget{small, small}));
        } else {
          TauBudget b;
          b.max_degree = budget == 0 ? 2 : budget;
          b.cap = b.max_degree + 1;
          b.wreath_max_degree = std::min(b.max_degree, 2);
          report = check_tau_axioms(b);
        }
        out << (opt.json ? report.to_json().dump(2) + "\n" : report.to_table());
        return report.ok() ? ok : axiom_violation;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("kx-rank", "Filtration rank table of a cell complex");
    sub->add_option("file", path, "Cell file: lines `<name> <dim> [A] [B]`")->required();
    sub->add_option("--max", n, "Highest power N")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      action = [&] {
        check_degree(n, opt, "power --max");
        CellComplex cx = CellComplex::load(path);
        std::vector<FiltrationRankTable> rows;
        for (int N = 0; N <= n; ++N) rows.push_back(rank_table(cx, N));
        if (opt.json) {
          out << rank_table_to_json(rows).dump(2) << "\n";
        } else {
          out << "cells " << cx.cells().size() << ", relative " << cx.relative_cells().size() << ", subcomplex "
              << cx.subcomplex_cells().size() << "\n";
          out << format_rank_table(rows);
        }
        for (const auto& r : rows)
          if (r.row_sum() != r.total) return invariant_violation;
        return ok;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("excision", "Compare the models of (X, A) and (B, B cap A)");
    sub->add_option("file", path, "Cell file with A and B flags")->required();
    sub->add_option("--max", n, "Highest degree")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      action = [&] {
        check_degree(n, opt, "degree --max");
        AxiomReport report = excision_check(CellComplex::load(path), n);
        out << (opt.json ? report.to_json().dump(2) + "\n" : report.to_table());
        return report.ok() ? ok : axiom_violation;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("char-table", "Character table of S<n> or S<l>wrS<k>");
    sub->add_option("group", spec, "Group, e.g. S4 or S2wrS3")->required();
    sub->add_option("--source", source, "oracle (permutation groups) or combinatorial")
        ->check(CLI::IsMember({"oracle", "combinatorial"}));
    sub->callback([&] { action = [&] { return char_table(spec, source, opt, out); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : argument_error;
  }

  try {
    return action();
  } catch (const IntegralityError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return invariant_violation;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return argument_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return argument_error;
  } catch (const std::exception& e) {
    err << "invariant violation: " << e.what() << "\n";
    return invariant_violation;
  }
}

}  // namespace kring::cli
