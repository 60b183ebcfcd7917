#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kring/partition.hpp"

namespace kring {

class TensorSym;

/// The five classical bases of the ring of symmetric functions.
enum class Basis { monomial, elementary, homogeneous, power, schur };

char basis_letter(Basis b);
std::optional<Basis> basis_from_letter(char c);

/// Coefficients of an element in one basis.
struct Expansion {
  Basis basis = Basis::schur;
  PartitionMap<Rational> terms;

  bool operator==(const Expansion&) const = default;
};

/// Integer-valued expansion, for elements known to be virtual characters.
using IntegralTerms = PartitionMap<Integer>;

/// A symmetric function with exact rational coefficients.
///
/// Stored in the power-sum basis: products, plethysm and the Kronecker product
/// are monomial or diagonal there. Elements may mix degrees. No zero
/// coefficient is ever stored, so equality is structural.
class SymFunc {
 public:
  using Terms = PartitionMap<Rational>;

  SymFunc() = default;

  static SymFunc zero() { return {}; }
  static SymFunc one() { return constant(1); }
  static SymFunc constant(const Rational& c);
  /// p_lambda.
  static SymFunc power(const Partition& lambda);
  /// The basis element b_lambda.
  static SymFunc basis_element(Basis b, const Partition& lambda);
  static SymFunc from_expansion(const Expansion& e);
  static SymFunc from_power_terms(Terms terms);

  static SymFunc schur(const Partition& l) { return basis_element(Basis::schur, l); }
  static SymFunc elementary(int n) { return basis_element(Basis::elementary, n == 0 ? Partition{} : Partition{n}); }
  static SymFunc homogeneous(int n) { return basis_element(Basis::homogeneous, n == 0 ? Partition{} : Partition{n}); }

  const Terms& power_terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Highest degree carrying a nonzero term, or -1 for zero.
  int max_degree() const;
  bool is_homogeneous(int n) const;
  SymFunc degree_part(int n) const;
  /// Drops every term above degree `max_degree`.
  SymFunc truncated(int max_degree) const;

  Expansion expand(Basis b) const;
  /// Throws IntegralityError on a non-integer coefficient.
  IntegralTerms expand_integral(Basis b) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= -1; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

  bool operator==(const SymFunc&) const = default;

 private:
  void add_term(const Partition& p, const Rational& c);

  Terms terms_;
};

/// Convert an expansion to another basis (exact).
Expansion convert(const Expansion& e, Basis to);

SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Product truncated at `max_degree`; terms above the cap are never formed.
SymFunc multiply_truncated(const SymFunc& f, const SymFunc& g, int max_degree);

/// Hopf coproduct, p_n -> p_n (x) 1 + 1 (x) p_n.
TensorSym coproduct(const SymFunc& f);

/// Hall inner product, <p_lambda, p_mu> = delta z_lambda.
Rational hall_inner(const SymFunc& f, const SymFunc& g);

/// Adams operation p_n o f: every p_r in f becomes p_{nr}.
SymFunc adams(const SymFunc& f, int n);

/// Plethysm f o g. The right argument may be any element: the power-sum
/// substitution rule defines it for virtual and mixed-degree g as well.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Internal (Kronecker) product, degreewise: p_lambda * p_mu = delta z_lambda p_lambda.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);

/// The involution with omega(e_n) = h_n and omega(s_lambda) = s_{lambda'}.
SymFunc omega(const SymFunc& f);

/// Littlewood-Richardson coefficient c^nu_{lambda mu}, counted from LR tableaux
/// of skew shape nu/lambda and weight mu. Independent of the power-sum kernel.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Schur expansion of s_lambda * s_mu from the LR tableau count.
IntegralTerms lr_product(const Partition& lambda, const Partition& mu);

/// Dense transition data for one degree: basis element rows in power sums and
/// power sums in the basis.
struct Transition {
  std::vector<Partition> partitions;                  // partitions_of(n)
  std::vector<std::vector<Rational>> to_power;        // [lambda][rho]: b_lambda = sum to_power p_rho
  std::vector<std::vector<Rational>> from_power;      // [rho][lambda]: p_rho = sum from_power b_lambda
};

const Transition& transition(Basis b, int n);

}  // namespace kring
