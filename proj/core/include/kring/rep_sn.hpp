#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "kring/symfunc.hpp"

namespace kring {

/// A virtual representation of S_n: integer multiplicities on the
/// irreducibles, which are indexed by partitions of n.
class RepSn {
 public:
  explicit RepSn(int n = 0) : n_(n) {}
  RepSn(int n, const PartitionMap<Integer>& coeffs);

  static RepSn irreducible(const Partition& lambda);
  static RepSn trivial(int n) { return irreducible(n == 0 ? Partition{} : Partition{n}); }
  static RepSn sign(int n);
  /// The regular representation: each irreducible with multiplicity its dimension.
  static RepSn regular(int n);

  int n() const { return n_; }
  const PartitionMap<Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// True when every multiplicity is nonnegative.
  bool is_genuine() const;
  Integer dimension() const;

  void add(const Partition& lambda, const Integer& c);

  RepSn& operator+=(const RepSn& o);
  RepSn& operator-=(const RepSn& o);
  RepSn& operator*=(const Integer& c);
  friend RepSn operator+(RepSn a, const RepSn& b) { return a += b; }
  friend RepSn operator-(RepSn a, const RepSn& b) { return a -= b; }
  friend RepSn operator*(RepSn a, const Integer& c) { return a *= c; }

  bool operator==(const RepSn&) const = default;

 private:
  int n_ = 0;
  PartitionMap<Integer> coeffs_;
};

/// chi^lambda(class mu). Throws std::invalid_argument on a size mismatch.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// Dimension of the irreducible indexed by lambda.
Integer irreducible_dimension(const Partition& lambda);

/// Frobenius characteristic: irreducible lambda goes to s_lambda.
SymFunc ch(const RepSn& a);

/// Inverse characteristic for a homogeneous element of degree n. Throws
/// IntegralityError on a non-integral Schur expansion and std::invalid_argument
/// on an inhomogeneous input.
RepSn ch_inverse(const SymFunc& f, int n);

/// Induction product across S_i x S_j <= S_{i+j}.
RepSn induction_product(const RepSn& a, const RepSn& b);

/// Pure tensors [alpha] (x) [beta] with integer coefficients.
using RepTensor = std::map<std::pair<Partition, Partition>, Integer>;

/// Restriction to S_i x S_j for every i + j = n; entry i of the result.
std::vector<RepTensor> restriction_coproduct(const RepSn& a);

/// Internal tensor product (pointwise product of characters).
RepSn internal_product(const RepSn& a, const RepSn& b);

/// Tensor with the sign representation.
RepSn sign_twist(const RepSn& a);

/// Coefficient of the sign representation (1^n).
Integer sign_projection_g(const RepSn& a);

/// Multiplicity pairing <a, b> = sum of products of coefficients.
Integer multiplicity_pairing(const RepSn& a, const RepSn& b);

/// `R(S_n){ c1*[l1] + c2*[l2] }`.
std::string format_rep(const RepSn& a);
RepSn parse_rep(std::string_view text);

nlohmann::json rep_to_json(const RepSn& a);
RepSn rep_from_json(const nlohmann::json& j);

}  // namespace kring
