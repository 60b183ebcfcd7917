#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "kring/kmodel.hpp"
#include "kring/sym_format.hpp"
#include "kring/tau.hpp"
#include "monomial.hpp"

using namespace kring;
using namespace kring::testing;

namespace {

std::string cells(const std::string& name) { return std::string(KRING_GOLDEN_DIR) + "/cells/" + name; }

// Tuples (m_{i,c}) with sum_i,c i * m_{i,c} = n, counted by brute recursion.
long brute_monomials(int g, int n) {
  std::function<long(int, int, int)> rec = [&](int slot_i, int slot_c, int left) -> long {
    if (left == 0) return 1;
    if (slot_i > left) return 0;
    const int next_i = slot_c + 1 == g ? slot_i + 1 : slot_i;
    const int next_c = slot_c + 1 == g ? 0 : slot_c + 1;
    long total = 0;
    for (int m = 0; m * slot_i <= left; ++m) total += rec(next_i, next_c, left - m * slot_i);
    return total;
  };
  return g == 0 ? (n == 0 ? 1 : 0) : rec(1, 0, n);
}

// The ring map sending every generator to a line: p_k(x_c) -> 1.
Rational rank_one(const KElement& x) {
  Rational acc = 0;
  for (const auto& [key, c] : x.power_terms()) acc += c;
  return acc;
}

KElement lam(const KElement& x, int n) { return model_lambda(x, n, 12); }

}  // namespace

TEST(CellComplexType, ParsesFlagsAndComments) {
  const auto cx = CellComplex::parse("# comment\n e0 0 A  # base point\n\ne2 2\ne4 4 B\n");
  ASSERT_EQ(cx.cells().size(), 3u);
  EXPECT_EQ(cx.cells()[0], (Cell{"e0", 0, true, false}));
  EXPECT_EQ(cx.cells()[2], (Cell{"e4", 4, false, true}));
  EXPECT_EQ(cx.relative_cells().size(), 2u);
  EXPECT_EQ(cx.subcomplex_cells().size(), 1u);
}

TEST(CellComplexType, RejectsBadInput) {
  EXPECT_THROW(CellComplex::parse("e1 1\n"), std::invalid_argument);
  EXPECT_THROW(CellComplex::parse("e0 -2\n"), std::invalid_argument);
  EXPECT_THROW(CellComplex::parse("e0\n"), ParseError);
  EXPECT_THROW(CellComplex::parse("e0 zero\n"), ParseError);
  EXPECT_THROW(CellComplex::parse("e0 0 C\n"), ParseError);
  EXPECT_THROW(CellComplex::parse("e0 0\ne0 2\n"), ParseError);
  EXPECT_THROW(CellComplex::load(cells("odd.cells")), std::invalid_argument);
  EXPECT_THROW(CellComplex::load(cells("missing.cells")), std::invalid_argument);
}

TEST(FreeModelRanks, PointIsPartitionCounts) {
  const FreeModel pt = FreeModel::of(CellComplex::load(cells("pt.cells")));
  ASSERT_EQ(pt.generator_count(), 1);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(pt.rank(n), brute_monomials(1, n)) << n;
    EXPECT_EQ(pt.rank(n), Integer(static_cast<long>(partitions_of(n).size())));
    EXPECT_EQ(static_cast<long>(pt.monomial_labels(n).size()), brute_monomials(1, n));
  }
  EXPECT_EQ(pt.rank(4), 5);
  EXPECT_EQ(pt.rank(8), 22);
}

TEST(FreeModelRanks, EmptyRelativeComplex) {
  const FreeModel empty = FreeModel::of(CellComplex::parse("e0 0 A\ne2 2 A\n"));
  EXPECT_EQ(empty.generator_count(), 0);
  EXPECT_EQ(empty.rank(0), 1);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(empty.rank(n), 0);
}

TEST(FreeModelRanks, Cp1AndMore) {
  const FreeModel two(CellComplex::load(cells("cp2_pt.cells")).relative_cells());
  EXPECT_EQ(two.rank(2), 5);  // x1^2, x1 x2, x2^2, lambda^2 x1, lambda^2 x2
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(free_rank(g, n), brute_monomials(g, n)) << g << "," << n;
}

TEST(FreeModelRanks, MonomialsSpanEachDegree) {
  // The weight-n lambda-monomials are a basis of the degree-n piece: their
  // tensor-Schur coordinates form a square unimodular matrix.
  for (int g = 1; g <= 2; ++g) {
    std::vector<Cell> gens;
    for (int c = 0; c < g; ++c) gens.push_back({"x" + std::to_string(c), 2, false, false});
    const FreeModel model(gens);
    for (int n = 0; n <= (g == 1 ? 6 : 4); ++n) {
      const auto labels = model.monomial_labels(n);
      std::vector<TensorSym::Key> columns;
      std::vector<std::vector<Integer>> rows;
      for (const auto& label : labels) {
        const auto terms = model.monomial(label).expand_integral(Basis::schur);
        for (const auto& [key, c] : terms) {
          int degree = 0;
          for (const auto& p : key) degree += p.size();
          ASSERT_EQ(degree, n);
          if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
        }
      }
      ASSERT_EQ(labels.size(), columns.size());
      for (const auto& label : labels) {
        const auto terms = model.monomial(label).expand_integral(Basis::schur);
        std::vector<Integer> row;
        for (const auto& key : columns) {
          auto it = terms.find(key);
          row.push_back(it == terms.end() ? Integer(0) : it->second);
        }
        rows.push_back(row);
      }
      const Integer det = determinant(rows);
      EXPECT_TRUE(det == 1 || det == -1) << "g=" << g << " n=" << n << " det=" << det;
    }
  }
}

TEST(ChangeOfBasis, UnimodularUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    const auto m = monomial_to_schur_matrix(n);
    ASSERT_EQ(m.size(), partitions_of(n).size());
    for (const auto& row : m) ASSERT_EQ(row.size(), m.size());
    const Integer det = determinant(m);
    EXPECT_TRUE(det == 1 || det == -1) << n;
  }
}

TEST(ChangeOfBasis, RowsMatchMonomialOracle) {
  // The row of the monomial prod lambda^{i}(x) for the label lambda is e_lambda;
  // decompose e_lambda in n variables directly.
  for (int n = 1; n <= 5; ++n) {
    const auto m = monomial_to_schur_matrix(n);
    const auto labels = FreeModel({{"x", 0, false, false}}).monomial_labels(n);
    const auto columns = partitions_of(n);
    const auto x = variables(n);
    for (std::size_t r = 0; r < labels.size(); ++r) {
      Poly e = poly_constant(n, 1);
      for (int part : labels[r][0].parts()) e = poly_mul(e, elementary(part, x, n));
      const auto expected = schur_decompose(e, n);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        auto it = expected.find(columns[c]);
        EXPECT_EQ(Rational(m[r][c]), it == expected.end() ? Rational(0) : it->second);
      }
    }
  }
}

TEST(Determinant, Basics) {
  EXPECT_EQ(determinant({}), 1);
  EXPECT_EQ(determinant({{Integer(3)}}), 3);
  EXPECT_EQ(determinant({{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant({{0, 2, 1}, {3, 1, 1}, {1, 1, 5}}), -26);
}

TEST(ModelLambda, Examples) {
  const FreeModel two({{"a", 2, false, false}, {"b", 2, false, false}});
  const KElement x1 = two.generator(0), x2 = two.generator(1);
  EXPECT_EQ(lam(x1 + x2, 2), lam(x1, 2) + x1 * x2 + lam(x2, 2));

  const FreeModel one({{"x", 0, false, false}});
  EXPECT_EQ(lam(one.generator(0), 2), TensorSym::embed(1, 0, SymFunc::elementary(2)));

  const KElement x = one.generator(0);
  const KElement lhs = lam(x * Rational(2), 3);
  EXPECT_EQ(lhs, lam(x, 3) * Rational(2) + lam(x, 2) * x * Rational(2));
  // Rank-one specialization: lambda^3(2) = C(2,3) = 0 on both sides.
  EXPECT_EQ(rank_one(lhs), 0);
  EXPECT_EQ(Rational(binomial(2, 3)), 0);
  EXPECT_THROW(model_lambda(x, 5, 4), CapError);
}

TEST(ModelLambda, RankOneSpecializationIsBinomial) {
  Rng rng(0x5eed0301);
  const FreeModel two({{"a", 2, false, false}, {"b", 2, false, false}});
  const auto basis = two.basis_elements(2);
  for (int trial = 0; trial < 40; ++trial) {
    KElement x = two.zero();
    for (int t = 0; t < 2; ++t) x += basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))] * Rational(uniform(rng, -2, 2));
    const Rational r = rank_one(x);
    ASSERT_EQ(r.get_den(), 1);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(rank_one(lam(x, n)), Rational(binomial(r.get_num(), n)));
  }
}

TEST(ModelLambda, AgreesWithGnOfTau) {
  const FreeModel two({{"a", 2, false, false}, {"b", 2, false, false}});
  for (const auto& x : two.basis_elements(2))
    for (int n = 0; n <= 3; ++n) ASSERT_EQ(lambda_from_tau(x, n, 3), lam(x, n)) << format_tensor(x);
}

TEST(ModelLambda, AxiomsOnTheTwoGeneratorModel) {
  const FreeModel two({{"a", 2, false, false}, {"b", 2, false, false}});
  const auto report = check_lambda_axioms(two.instance(3, 4), {2, 2});
  EXPECT_TRUE(report.ok()) << report.to_table();
  EXPECT_GT(report.checked(), 100u);
}

TEST(ModelProducts, AreDegreewise) {
  const FreeModel two({{"a", 2, false, false}, {"b", 2, false, false}});
  const auto basis = two.basis_elements(3);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const int i = a.max_degree(), j = b.max_degree();
      const KElement ab = a * b;
      EXPECT_EQ(ab.degree_part(i + j), ab);
    }
}

TEST(RankTable, Cp1DegreeTwo) {
  const auto t = rank_table(CellComplex::load(cells("cp1.cells")), 2);
  EXPECT_EQ(t.entries, (std::vector<Integer>{2, 1, 2}));
  EXPECT_EQ(t.total, 5);
  EXPECT_EQ(t.row_sum(), 5);
  EXPECT_EQ(format_rank_table({t}), "N=2: total 5  split 2,1,2  sum 5\n");
}

TEST(RankTable, DegreeZeroAndCp2) {
  const auto t0 = rank_table(CellComplex::load(cells("cp1.cells")), 0);
  EXPECT_EQ(t0.entries, (std::vector<Integer>{1}));
  const auto t1 = rank_table(CellComplex::load(cells("cp2.cells")), 1);
  EXPECT_EQ(t1.entries, (std::vector<Integer>{2, 1}));
  EXPECT_EQ(t1.total, 3);
}

TEST(RankTable, RowSumsAreTotalRanks) {
  for (const char* name : {"cp1.cells", "cp2.cells", "cp2_pt.cells", "cp1xcp1.cells", "pt.cells"}) {
    const auto cx = CellComplex::load(cells(name));
    const FreeModel all(cx.cells());
    for (int n = 0; n <= 6; ++n) {
      const auto t = rank_table(cx, n);
      EXPECT_EQ(t.row_sum(), t.total) << name << " N=" << n;
      EXPECT_EQ(t.total, all.rank(n)) << name << " N=" << n;
      EXPECT_EQ(t.total, brute_monomials(static_cast<int>(cx.cells().size()), n));
    }
  }
}

TEST(RankTable, Json) {
  const auto cx = CellComplex::load(cells("cp1.cells"));
  const auto j = rank_table_to_json({rank_table(cx, 1), rank_table(cx, 2)});
  ASSERT_TRUE(j.contains("entries"));
  int seen = 0;
  for (const auto& e : j["entries"])
    if (e["N"] == 2) {
      ++seen;
      EXPECT_EQ(e["rank"], e["k"] == 1 ? 1 : 2);
    }
  EXPECT_EQ(seen, 3);
}

TEST(Excision, ConfiguredPartitions) {
  for (const char* name : {"excision_identity.cells", "excision_points.cells", "excision_cp2.cells"}) {
    const auto report = excision_check(CellComplex::load(cells(name)), 6);
    EXPECT_TRUE(report.ok()) << name << "\n" << report.to_table();
    EXPECT_EQ(report.checked(), 8u);
  }
}

TEST(Excision, InconsistentPartitionIsAnError) {
  EXPECT_THROW(excision_check(CellComplex::parse("e0 0 A\ne2 2\n"), 3), std::invalid_argument);
}
