#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "kring/rational.hpp"

namespace kring {

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Partitions index the irreducible representations and the conjugacy classes
/// of the symmetric group, and every symmetric-function basis.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zeros; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  /// Multiplicity of each part value; index v holds the number of parts equal to v.
  std::vector<int> multiplicities() const;

  /// Centralizer order z = prod_i i^{m_i} m_i! of the cycle type.
  Integer z() const;

  /// Union of parts (p_lambda * p_mu = p_{lambda u mu}).
  Partition merged(const Partition& other) const;

  /// Every part multiplied by `factor`.
  Partition scaled(int factor) const;

  /// (-1)^{|lambda| - l(lambda)}: the sign of a permutation of this cycle type.
  int sign() const { return ((size_ - length()) % 2 == 0) ? 1 : -1; }

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  /// Plain lexicographic comparison of the part lists.
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical ordering for serialized output: by size ascending, then
/// descending lexicographic order within one size.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

template <class V>
using PartitionMap = std::map<Partition, V, PartitionOrder>;

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions of n with every part at most `max_part`.
std::vector<Partition> partitions_of(int n, int max_part);

/// Number of partitions of n.
Integer partition_count(int n);

/// Index of `p` inside partitions_of(p.size()); cached per n.
std::size_t partition_index(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace kring
