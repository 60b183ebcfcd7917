#pragma once

#include <vector>

#include "kring/partition.hpp"

namespace kring {

/// Irreducible character of the symmetric group, chi^lambda at the class of
/// cycle type rho, by border-strip (Murnaghan-Nakayama) recursion.
///
/// Memoized on (lambda, rho); safe to call concurrently.
/// Throws std::invalid_argument if |lambda| != |rho|.
Integer character_value(const Partition& lambda, const Partition& rho);

/// Character table of S_n. Rows and columns both follow partitions_of(n).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  /// values[i][j] = chi^{partitions[i]}(partitions[j]).
  std::vector<std::vector<Integer>> values;

  const Integer& at(const Partition& lambda, const Partition& rho) const {
    return values[partition_index(lambda)][partition_index(rho)];
  }
};

/// Cached character table; the reference stays valid for the process lifetime.
const CharacterTable& character_table(int n);

}  // namespace kring
