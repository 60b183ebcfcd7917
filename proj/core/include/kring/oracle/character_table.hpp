#pragma once

#include <memory>
#include <vector>

#include "kring/oracle/class_function.hpp"

namespace kring::oracle {

/// Partitions of n as part lists, in descending lexicographic order.
std::vector<std::vector<int>> partition_list(int n);

/// Irreducible characters recovered from seed characters: each seed is
/// reduced against the characters found so far and a remainder of norm 1 is
/// a new irreducible (sign fixed by a positive degree). When the seeds stall,
/// products with known irreducibles and differences of remainders are added.
/// Throws std::runtime_error if the seeds do not span the class functions.
std::vector<ClassFunction> irreducible_table(const PermGroup& g, std::vector<ClassFunction> seeds);

struct SymmetricTable {
  std::shared_ptr<const PermGroup> group;
  /// labels[i] is the partition whose Young permutation character first
  /// contained characters[i].
  std::vector<std::vector<int>> labels;
  std::vector<ClassFunction> characters;
};

/// S_n table by inverting Young permutation characters, processed in
/// descending lexicographic order. Cached; n >= 1.
const SymmetricTable& symmetric_table(int n);

struct WreathTable {
  int l = 0;
  int k = 0;
  std::shared_ptr<const PermGroup> group;  // build_wreath(l, k)
  std::vector<ClassFunction> characters;
};

/// S_l wr S_k table seeded by power-times-pullback characters, restrictions
/// of the S_{lk} table, and characters induced from the block subgroups
/// S_l wr S_i x S_l wr S_j. Cached; l, k >= 1.
const WreathTable& wreath_table(int l, int k);

}  // namespace kring::oracle
