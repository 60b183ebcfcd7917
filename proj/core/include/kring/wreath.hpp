#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kring/rep_sn.hpp"

namespace kring {

/// A map from partitions of l to partitions with total size k.
///
/// As an irreducible label of S_l wr S_k it assigns to each irreducible of S_l
/// (keyed by its partition) a partition; as a conjugacy-class label it assigns
/// to each cycle type of S_l the partition formed by the lengths of the cycles
/// of the top permutation whose cycle product has that type. Empty values are
/// never stored.
class MultiPartition {
 public:
  MultiPartition() = default;
  /// Throws std::invalid_argument on a key that is not a partition of l or a
  /// total size other than k.
  MultiPartition(int l, int k, const PartitionMap<Partition>& assignment);

  /// {(l) -> (k)}: the trivial representation, or the identity class.
  static MultiPartition trivial(int l, int k);

  int l() const { return l_; }
  int k() const { return k_; }
  const PartitionMap<Partition>& assignment() const { return assignment_; }
  /// Assigned partition, or the empty partition.
  Partition at(const Partition& key) const;

  /// `{[2]->[1],[1,1]->[1]}`, keys in descending lexicographic order.
  std::string to_string() const;

  bool operator==(const MultiPartition&) const = default;

 private:
  int l_ = 0;
  int k_ = 0;
  PartitionMap<Partition> assignment_;
};

/// Total order used for every serialized listing of multipartitions: compare
/// assigned partitions key by key (keys in descending lex order), larger first.
struct MultiPartitionOrder {
  bool operator()(const MultiPartition& a, const MultiPartition& b) const;
};

template <class V>
using MultiPartitionMap = std::map<MultiPartition, V, MultiPartitionOrder>;

using WreathClass = MultiPartition;

/// Every multipartition with keys partitions of l and total size k, sorted.
std::vector<MultiPartition> multipartitions(int l, int k);

/// |S_l wr S_k| = (l!)^k k!.
Integer wreath_order(int l, int k);

/// Centralizer order of a conjugacy class: prod_c z_{rho(c)} z_c^{l(rho(c))}.
Integer wreath_centralizer(const WreathClass& rho);

/// Cycle type in S_{lk} of an element of the class rho.
Partition wreath_class_cycle_type(const WreathClass& rho);

/// Rational-valued class function on S_l wr S_k.
struct WreathClassFunction {
  int l = 0;
  int k = 0;
  MultiPartitionMap<Rational> values;  // zero values may be omitted

  Rational at(const WreathClass& rho) const;
  WreathClassFunction& operator*=(const WreathClassFunction& o);
};

/// Normalized inner product (1/|G|) sum_g f(g) h(g) for real class functions.
Rational wreath_inner(const WreathClassFunction& f, const WreathClassFunction& h);

/// A virtual representation of S_l wr S_k.
class WreathRep {
 public:
  WreathRep(int l = 0, int k = 0) : l_(l), k_(k) {}

  static WreathRep irreducible(const MultiPartition& phi);

  int l() const { return l_; }
  int k() const { return k_; }
  const MultiPartitionMap<Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(const MultiPartition& phi) const;
  bool is_zero() const { return coeffs_.empty(); }
  Integer dimension() const;

  void add(const MultiPartition& phi, const Integer& c);

  WreathRep& operator+=(const WreathRep& o);
  WreathRep& operator-=(const WreathRep& o);
  friend WreathRep operator+(WreathRep a, const WreathRep& b) { return a += b; }
  friend WreathRep operator-(WreathRep a, const WreathRep& b) { return a -= b; }

  bool operator==(const WreathRep&) const = default;

 private:
  int l_ = 0;
  int k_ = 0;
  MultiPartitionMap<Integer> coeffs_;
};

/// Irreducible characters of S_l wr S_k, built by inducing
/// (x)_mu (V_mu^{(x) k_mu} (x) p* W_{phi(mu)}) from the product of block
/// subgroups prod_mu S_l wr S_{k_mu}.
struct WreathCharacterTable {
  int l = 0;
  int k = 0;
  std::vector<MultiPartition> irreducibles;
  std::vector<WreathClass> classes;
  std::vector<Integer> centralizers;
  std::vector<std::vector<Integer>> values;  // [irreducible][class]

  std::size_t irreducible_index(const MultiPartition& phi) const;
  std::size_t class_index(const WreathClass& rho) const;
};

/// Cached table; safe for concurrent readers.
const WreathCharacterTable& wreath_character_table(int l, int k);

/// Character of the irreducible phi from the induction construction.
WreathClassFunction wreath_irreducible_character(const MultiPartition& phi);

WreathClassFunction wreath_character(const WreathRep& w);

/// Character of V^{(x) m} with the permutation action: product over the
/// cycles of the top permutation of chi_V at the cycle product.
WreathClassFunction power_character(const RepSn& v, int m);

/// Character of W pulled back along S_l wr S_k -> S_k.
WreathClassFunction pullback_character(const RepSn& w, int l);

/// Multiplicities of the irreducibles in a class function. Throws
/// IntegralityError on a non-integer multiplicity.
WreathRep decompose(const WreathClassFunction& f);

/// Power map V -> V^{(x) m}. Rejects virtual V with std::invalid_argument.
WreathRep power_map(const RepSn& v, int m);

/// Induction to S_{lk} along block concatenation: ch is the sum over terms of
/// prod_mu s_{phi(mu)} o s_mu.
RepSn wreath_induce(const WreathRep& w);

/// Class-level induction to S_{lk}, keyed by cycle type.
PartitionMap<Rational> induce_class_function(const WreathClassFunction& f);

/// Restriction from S_{lk}, by adjointness with wreath_induce.
WreathRep wreath_restrict(const RepSn& a, int l, int k);

/// Pullback along S_l wr S_k -> S_k: mu -> {(l) -> mu}.
WreathRep pullback(const RepSn& w, int l);

/// Internal tensor product (pointwise product of characters).
WreathRep wreath_internal(const WreathRep& a, const WreathRep& b);

/// Induction product S_l wr S_i x S_l wr S_j -> S_l wr S_{i+j}: a
/// Littlewood-Richardson product in each key.
WreathRep wreath_cross(const WreathRep& a, const WreathRep& b);

/// Class-level induction from a product of block subgroups
/// prod_i S_l wr S_{k_i} to S_l wr S_{sum k_i}.
WreathClassFunction induce_from_blocks(const std::vector<WreathClassFunction>& factors);

/// tau^m of a genuine V: pairs (s_mu o ch V, mu) for every mu of m.
std::vector<std::pair<SymFunc, Partition>> delta_map(const RepSn& v, int m);

MultiPartition parse_multipartition(std::string_view text, int l, int k);
std::string format_wreath_rep(const WreathRep& w);

nlohmann::json multipartition_to_json(const MultiPartition& phi);
nlohmann::json wreath_rep_to_json(const WreathRep& w);
WreathRep wreath_rep_from_json(const nlohmann::json& j);

}  // namespace kring
