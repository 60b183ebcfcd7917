#pragma once

#include <map>
#include <vector>

#include "kring/symfunc.hpp"

namespace kring {

/// Ordering for tuples of partitions: total size, then factorwise PartitionOrder.
struct PartitionTupleOrder {
  bool operator()(const std::vector<Partition>& a, const std::vector<Partition>& b) const;
};

template <class V>
using PartitionTupleMap = std::map<std::vector<Partition>, V, PartitionTupleOrder>;

/// An element of the g-fold tensor power of the ring of symmetric functions,
/// stored in the p (x) ... (x) p basis.
class TensorSym {
 public:
  using Key = std::vector<Partition>;
  using Terms = PartitionTupleMap<Rational>;

  explicit TensorSym(int factors = 1) : factors_(factors) {}

  static TensorSym one(int factors);
  static TensorSym constant(int factors, const Rational& c);
  /// p_1 in tensor factor `index`, the free generator of that factor.
  static TensorSym generator(int factors, int index);
  /// f placed in tensor factor `index`, 1 elsewhere.
  static TensorSym embed(int factors, int index, const SymFunc& f);
  /// f_0 (x) f_1 (x) ... (x) f_{g-1}.
  static TensorSym pure(const std::vector<SymFunc>& fs);
  /// Linear combination of tensor basis elements b_{l_0} (x) ... (x) b_{l_{g-1}}.
  static TensorSym from_expansion(int factors, Basis b, const Terms& terms);

  int factors() const { return factors_; }
  const Terms& power_terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  TensorSym degree_part(int n) const;

  void add_term(Key key, const Rational& c);

  /// Coefficients in the tensor basis b (x) ... (x) b.
  Terms expand(Basis b) const;
  PartitionTupleMap<Integer> expand_integral(Basis b) const;

  TensorSym& operator+=(const TensorSym& o);
  TensorSym& operator-=(const TensorSym& o);
  TensorSym& operator*=(const Rational& c);
  friend TensorSym operator+(TensorSym a, const TensorSym& b) { return a += b; }
  friend TensorSym operator-(TensorSym a, const TensorSym& b) { return a -= b; }
  friend TensorSym operator-(TensorSym a) { return a *= -1; }
  friend TensorSym operator*(TensorSym a, const Rational& c) { return a *= c; }
  friend TensorSym operator*(const TensorSym& a, const TensorSym& b);

  bool operator==(const TensorSym&) const = default;

 private:
  int factors_ = 1;
  Terms terms_;
};

TensorSym multiply(const TensorSym& a, const TensorSym& b);

/// p_n o x: every p_r in every factor becomes p_{nr}.
TensorSym adams(const TensorSym& x, int n);

/// Plethysm of a symmetric function into a tensor element.
TensorSym plethysm(const SymFunc& f, const TensorSym& x);

/// Sum over common keys of the product of coefficients times prod z: the
/// tensor Hall pairing.
Rational hall_inner(const TensorSym& a, const TensorSym& b);

}  // namespace kring
