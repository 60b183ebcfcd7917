#pragma once

#include <utility>
#include <vector>

#include "kring/rep_sn.hpp"
#include "kring/wreath.hpp"

namespace kring {

// Memoized structure constants on irreducible labels, shared by the series
// operations. Every lookup is safe to call concurrently and returns a
// reference that stays valid for the process lifetime.

/// [alpha] o [beta] in R(S_{|alpha|+|beta|}): Littlewood-Richardson terms.
const IntegralTerms& induction_terms(const Partition& alpha, const Partition& beta);

/// [alpha] (x) [beta] in R(S_n) for |alpha| = |beta| = n: Kronecker terms.
const IntegralTerms& internal_terms(const Partition& alpha, const Partition& beta);

/// Restriction of [nu] to every S_i x S_j, flattened to (alpha, beta, c).
struct RestrictionTerm {
  Partition left;
  Partition right;
  Integer coefficient;
};
const std::vector<RestrictionTerm>& restriction_terms(const Partition& nu);

/// Restriction of [nu] from S_{lk} to S_l wr S_k.
const WreathRep& wreath_restriction_terms(const Partition& nu, int l, int k);

/// gamma(p*[kappa], P^k[mu]) in R(S_l wr S_k), l = |mu|, k = |kappa|.
const WreathRep& twisted_power_terms(const Partition& kappa, const Partition& mu);

/// Phi1 x Phi2 in R(S_l wr S_{k1+k2}).
const WreathRep& wreath_cross_terms(const MultiPartition& phi1, const MultiPartition& phi2);

}  // namespace kring
