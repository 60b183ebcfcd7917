#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "kring/lambda_axioms.hpp"
#include "kring/report.hpp"
#include "kring/tensor_sym.hpp"

namespace kring {

/// An element of the free lambda-ring on g generators: the g-fold tensor power
/// of the ring of symmetric functions, generator c being p_1 in factor c.
using KElement = TensorSym;

struct Cell {
  std::string name;
  int dimension = 0;
  bool in_a = false;  // cell of the subcomplex A
  bool in_b = false;  // cell of the second piece B (excision input only)
  bool operator==(const Cell&) const = default;
};

/// A finite complex of even-dimensional cells with a subcomplex A.
///
/// Text form, one cell per line: `<name> <dim> [A] [B]`; `#` starts a comment.
/// Cells without the A flag are the relative cells of (X, A).
class CellComplex {
 public:
  CellComplex() = default;
  /// Throws std::invalid_argument on an odd or negative dimension.
  explicit CellComplex(std::vector<Cell> cells);
  /// Throws ParseError on malformed lines and std::invalid_argument on odd cells.
  static CellComplex parse(std::string_view text);
  static CellComplex load(const std::string& path);

  const std::vector<Cell>& cells() const { return cells_; }
  std::vector<Cell> relative_cells() const;
  std::vector<Cell> subcomplex_cells() const;

 private:
  std::vector<Cell> cells_;
};

/// Number of g-tuples of partitions of total size n: the degree-n rank of the
/// free lambda-ring on g generators.
Integer free_rank(int generators, int n);

/// The free lambda-ring on a list of generators.
class FreeModel {
 public:
  explicit FreeModel(std::vector<Cell> generators);
  /// The model of (X, A): one generator per relative cell.
  static FreeModel of(const CellComplex& cx) { return FreeModel(cx.relative_cells()); }

  int generator_count() const { return static_cast<int>(generators_.size()); }
  const std::vector<Cell>& generators() const { return generators_; }
  KElement zero() const { return KElement(factors()); }
  KElement one() const { return KElement::one(factors()); }
  KElement generator(int c) const;
  Integer rank(int n) const { return free_rank(generator_count(), n); }

  /// Labels of the lambda-monomials prod_c prod_i lambda^i(x_c)^{m_{i,c}} of
  /// weight n: a partition per generator whose parts are the exponents i.
  std::vector<std::vector<Partition>> monomial_labels(int n) const;
  /// The monomial, computed as a product of model_lambda values.
  KElement monomial(const std::vector<Partition>& label) const;

  /// Every tensor-Schur basis element of degree 1..max_degree.
  std::vector<KElement> basis_elements(int max_degree) const;
  /// A lambda-ring instance sampled on basis elements of degree at most
  /// max_degree, pairs restricted to total degree max_pair_degree.
  LambdaRingInstance<KElement> instance(int max_degree, int max_pair_degree) const;

 private:
  int factors() const { return std::max(1, generator_count()); }
  std::vector<Cell> generators_;
};

/// lambda^n(x) = e_n o x. Throws CapError when n exceeds the cap.
KElement model_lambda(const KElement& x, int n, int cap);

/// Determinant of a square integer matrix by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// Change of basis from the weight-n lambda-monomials of the one-generator
/// model to the Schur basis: rows are monomials, columns partitions of n.
std::vector<std::vector<Integer>> monomial_to_schur_matrix(int n);

/// Ranks of the filtration pieces at one power N: entry k is
/// rank K_k(Y, X) * rank K_{N-k}(X), with Y all cells and X the A-cells.
struct FiltrationRankTable {
  int n = 0;
  std::vector<Integer> entries;  // indexed by k = 0..n
  Integer total;                 // free-model rank of Y at degree n
  Integer row_sum() const;
};

FiltrationRankTable rank_table(const CellComplex& cx, int n);
std::string format_rank_table(const std::vector<FiltrationRankTable>& rows);
nlohmann::json rank_table_to_json(const std::vector<FiltrationRankTable>& rows);

/// Compares the models of (X, A) and (B, B cap A), with X the union of all
/// cells: generator multisets (by dimension) and graded ranks up to max_degree.
/// Throws std::invalid_argument when some cell lies in neither A nor B.
AxiomReport excision_check(const CellComplex& cx, int max_degree);

}  // namespace kring
