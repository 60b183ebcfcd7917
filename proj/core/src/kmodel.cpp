#include "kring/kmodel.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "kring/sym_format.hpp"

namespace kring {

// ---------------------------------------------------------------------------
// Cell complexes

CellComplex::CellComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (const auto& c : cells_)
    if (c.dimension < 0 || c.dimension % 2 != 0)
      throw std::invalid_argument("cell " + c.name + " has dimension " + std::to_string(c.dimension) +
                                  "; only even cells are supported");
}

CellComplex CellComplex::parse(std::string_view text) {
  std::vector<Cell> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("cell file line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() < 2) fail("expected `<name> <dim> [A] [B]`");
    Cell cell;
    cell.name = tokens[0];
    try {
      std::size_t used = 0;
      cell.dimension = std::stoi(tokens[1], &used);
      if (used != tokens[1].size()) fail("bad dimension `" + tokens[1] + "`");
    } catch (const std::logic_error&) {
      fail("bad dimension `" + tokens[1] + "`");
    }
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (tokens[i] == "A")
        cell.in_a = true;
      else if (tokens[i] == "B")
        cell.in_b = true;
      else
        fail("unknown flag `" + tokens[i] + "`");
    }
    for (const auto& c : cells)
      if (c.name == cell.name) fail("duplicate cell name `" + cell.name + "`");
    cells.push_back(cell);
  }
  return CellComplex(std::move(cells));
}

CellComplex CellComplex::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cell file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<Cell> CellComplex::relative_cells() const {
  std::vector<Cell> out;
  std::copy_if(cells_.begin(), cells_.end(), std::back_inserter(out), [](const Cell& c) { return !c.in_a; });
  return out;
}

std::vector<Cell> CellComplex::subcomplex_cells() const {
  std::vector<Cell> out;
  std::copy_if(cells_.begin(), cells_.end(), std::back_inserter(out), [](const Cell& c) { return c.in_a; });
  return out;
}

// ---------------------------------------------------------------------------
// Free model

Integer free_rank(int generators, int n) {
  if (n < 0) return 0;
  // Coefficients of prod_{j>=1} (1 - t^j)^{-g}, by convolution of partition counts.
  std::vector<Integer> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < generators; ++c) {
    std::vector<Integer> next(acc.size(), 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) next[i + j] += acc[i] * partition_count(j);
    acc = std::move(next);
  }
  return acc[n];
}

FreeModel::FreeModel(std::vector<Cell> generators) : generators_(std::move(generators)) {}

KElement FreeModel::generator(int c) const {
  if (c < 0 || c >= generator_count()) throw std::invalid_argument("FreeModel: no generator " + std::to_string(c));
  return KElement::generator(factors(), c);
}

namespace {

// Tuples of g partitions with total size n, in a fixed order.
std::vector<std::vector<Partition>> partition_tuples(int g, int n) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == g) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int size = remaining; size >= 0; --size) {
      if (idx + 1 == g && size != remaining) continue;
      for (const auto& p : partitions_of(size)) {
        current.push_back(p);
        rec(idx + 1, remaining - size);
        current.pop_back();
      }
    }
  };
  rec(0, n);
  return out;
}

}  // namespace

std::vector<std::vector<Partition>> FreeModel::monomial_labels(int n) const {
  if (generator_count() == 0) return n == 0 ? std::vector<std::vector<Partition>>{{}} : std::vector<std::vector<Partition>>{};
  return partition_tuples(generator_count(), n);
}

KElement FreeModel::monomial(const std::vector<Partition>& label) const {
  if (static_cast<int>(label.size()) != generator_count()) throw std::invalid_argument("FreeModel: label arity");
  KElement out = one();
  for (int c = 0; c < generator_count(); ++c) {
    const KElement x = generator(c);
    for (int i : label[static_cast<std::size_t>(c)].parts()) out = out * model_lambda(x, i, i);
  }
  return out;
}

std::vector<KElement> FreeModel::basis_elements(int max_degree) const {
  std::vector<KElement> out;
  if (generator_count() == 0) return out;
  for (int n = 1; n <= max_degree; ++n)
    for (auto& key : partition_tuples(generator_count(), n)) {
      KElement::Terms t;
      t.emplace(std::move(key), Rational(1));
      out.push_back(KElement::from_expansion(factors(), Basis::schur, t));
    }
  return out;
}

LambdaRingInstance<KElement> FreeModel::instance(int max_degree, int max_pair_degree) const {
  std::string name = "free" + std::to_string(generator_count());
  return plethystic_instance<KElement>(name, one(), basis_elements(max_degree), [=](const KElement& a, const KElement& b) {
    return a.max_degree() + b.max_degree() <= max_pair_degree;
  });
}

KElement model_lambda(const KElement& x, int n, int cap) {
  if (n < 0) throw std::invalid_argument("model_lambda: negative exponent");
  if (n > cap) throw CapError("model_lambda: exponent " + std::to_string(n) + " above the cap " + std::to_string(cap));
  return plethysm(SymFunc::elementary(n), x);
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Integer>> monomial_to_schur_matrix(int n) {
  FreeModel model({Cell{"x", 0, false, false}});
  const auto columns = partitions_of(n);
  std::vector<std::vector<Integer>> out;
  for (const auto& label : model.monomial_labels(n)) {
    const auto schur = model.monomial(label).expand_integral(Basis::schur);
    std::vector<Integer> row;
    for (const auto& lambda : columns) {
      auto it = schur.find(std::vector<Partition>{lambda});
      row.push_back(it == schur.end() ? Integer(0) : it->second);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank bookkeeping

Integer FiltrationRankTable::row_sum() const {
  Integer s = 0;
  for (const auto& e : entries) s += e;
  return s;
}

FiltrationRankTable rank_table(const CellComplex& cx, int n) {
  if (n < 0) throw std::invalid_argument("rank_table: negative power");
  const int relative = static_cast<int>(cx.relative_cells().size());
  const int sub = static_cast<int>(cx.subcomplex_cells().size());
  FiltrationRankTable t;
  t.n = n;
  for (int k = 0; k <= n; ++k) t.entries.push_back(free_rank(relative, k) * free_rank(sub, n - k));
  t.total = free_rank(static_cast<int>(cx.cells().size()), n);
  return t;
}

std::string format_rank_table(const std::vector<FiltrationRankTable>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "N=" << r.n << ": total " << r.total << "  split ";
    for (std::size_t k = 0; k < r.entries.size(); ++k) os << (k ? "," : "") << r.entries[k];
    os << "  sum " << r.row_sum() << (r.row_sum() == r.total ? "" : "  MISMATCH") << "\n";
  }
  return os.str();
}

nlohmann::json rank_table_to_json(const std::vector<FiltrationRankTable>& rows) {
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json totals = nlohmann::json::array();
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.entries.size(); ++k)
      entries.push_back({{"N", r.n}, {"k", k}, {"rank", integer_to_json(r.entries[k])}});
    totals.push_back({{"N", r.n}, {"total", integer_to_json(r.total)}, {"row_sum", integer_to_json(r.row_sum())}});
  }
  return {{"entries", entries}, {"totals", totals}};
}

AxiomReport excision_check(const CellComplex& cx, int max_degree) {
  for (const auto& c : cx.cells())
    if (!c.in_a && !c.in_b) throw std::invalid_argument("excision: cell " + c.name + " lies in neither A nor B");
  std::vector<Cell> left = cx.relative_cells();
  std::vector<Cell> right;
  for (const auto& c : cx.cells())
    if (c.in_b && !c.in_a) right.push_back(c);

  AxiomReport report("excision");
  auto dims = [](const std::vector<Cell>& cells) {
    std::vector<int> d;
    for (const auto& c : cells) d.push_back(c.dimension);
    std::sort(d.begin(), d.end());
    return d;
  };
  auto show = [](const std::vector<Cell>& cells) {
    std::string s = "{";
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i].name + ":" + std::to_string(cells[i].dimension);
    return s + "}";
  };
  if (dims(left) == dims(right))
    report.record_pass("generators");
  else
    report.record_failure({"generators", "fail", "X\\A vs B\\A", show(left), show(right)});
  const FreeModel lm(left), rm(right);
  for (int n = 0; n <= max_degree; ++n) {
    if (lm.rank(n) == rm.rank(n))
      report.record_pass("graded rank");
    else
      report.record_failure({"graded rank", "fail", "n=" + std::to_string(n), lm.rank(n).get_str(), rm.rank(n).get_str()});
  }
  return report;
}

}  // namespace kring
