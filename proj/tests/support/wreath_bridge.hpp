#pragma once

#include <optional>
#include <vector>

#include "kring/oracle/character_table.hpp"
#include "kring/rep_sn.hpp"
#include "kring/wreath.hpp"

// Translation between the permutation-group oracle and the library's labels.
// Only final values cross this bridge.

namespace kring::testing {

/// The S_n class label (cycle type) of a permutation.
Partition cycle_type_of(const oracle::Perm& x);

/// The S_l wr S_k class label of a block-preserving permutation of lk points:
/// each cycle of the block permutation contributes its length under the
/// cycle type of its cycle product.
WreathClass wreath_class_of(const oracle::Perm& x, int l, int k);

/// Values of an oracle class function listed in the library's class order.
std::vector<Rational> on_library_classes(const oracle::ClassFunction& f, int l, int k);

/// The library irreducible whose character equals f, if any.
std::optional<MultiPartition> match_irreducible(const oracle::ClassFunction& f, int l, int k);

/// Multiplicities of the oracle irreducibles of S_l wr S_k in f, labeled
/// through match_irreducible.
WreathRep decompose_on_oracle(const oracle::ClassFunction& f, int l, int k);

/// The oracle character of S_n whose Young label is lambda.
const oracle::ClassFunction& oracle_symmetric_character(const Partition& lambda);

/// Multiplicities of the oracle irreducibles of S_n in f, which must live on
/// the cached oracle group symmetric_table(n).group.
RepSn decompose_symmetric(const oracle::ClassFunction& f);

/// chi^a (x) chi^b on a Young subgroup S_i x S_j (first i points, then j),
/// read off the oracle tables of S_i and S_j.
oracle::ClassFunction young_character(const oracle::PermGroup& young, const Partition& a, const Partition& b);

/// The image of S_n wr S_m in S_m x S_{mn} under x -> (block permutation, x).
oracle::PermGroup diagonal_wreath(int n, int m);

/// tau^m of the irreducible V_v through the oracle: the power character of V_v
/// carried to the diagonal subgroup, induced to S_m x S_{mn} and split over
/// the irreducibles chi^mu (x) chi^nu. Entry mu is the S_{mn} factor.
PartitionMap<RepSn> oracle_delta(const Partition& v, int m);

/// The oracle character of the wreath irreducible phi.
const oracle::ClassFunction& oracle_wreath_character(const MultiPartition& phi);

}  // namespace kring::testing
