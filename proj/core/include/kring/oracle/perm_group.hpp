#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

// Brute-force permutation groups. Nothing under kring/oracle uses the
// symmetric-function or character code of the main library.

namespace kring::oracle {

/// A permutation of {0, ..., n-1} as its image list.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// Cycle lengths, largest first; fixed points count as 1-cycles.
std::vector<int> cycle_type(const Perm& a);
int fixed_points(const Perm& a);

/// Raised when a group would exceed the element-count guard.
class OrderGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A finite permutation group with its full element list and conjugacy
/// classes, enumerated at construction.
class PermGroup {
 public:
  static constexpr std::size_t default_max_order = 100000;

  struct ConjugacyClass {
    Perm representative;
    std::size_t size = 0;
  };

  /// Closure of the generators. Throws OrderGuardError past `max_order`.
  PermGroup(int degree, std::vector<Perm> generators, std::size_t max_order = default_max_order);
  /// The group formed by an explicit element list, which must be closed.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Sorted; the identity comes first.
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Perm& g) const;
  /// Position in elements(); throws std::invalid_argument if absent.
  std::size_t index_of(const Perm& g) const;

  /// Classes in order of first appearance in elements(); the identity class is first.
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(const Perm& g) const;

  bool is_subgroup_of(const PermGroup& g) const;

 private:
  PermGroup() = default;
  void enumerate_classes();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;  // per element
};

/// S_n on {0..n-1}.
PermGroup build_symmetric(int n);
/// S_{b1} x S_{b2} x ... on consecutive blocks of the given sizes.
PermGroup build_young(const std::vector<int>& blocks);
inline PermGroup build_young(int i, int j) { return build_young(std::vector<int>{i, j}); }
/// base wr S_k on k consecutive copies of the base's points; block b holds
/// points [b*d, (b+1)*d) for the base degree d.
PermGroup build_wreath_of(const PermGroup& base, int k);
/// S_l wr S_k inside S_{lk}.
PermGroup build_wreath(int l, int k);
/// a x b acting on the disjoint union, a's points first.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// One representative per left coset xH of h in g.
std::vector<Perm> left_coset_representatives(const PermGroup& g, const PermGroup& h);
/// One representative per double coset K x H.
std::vector<Perm> double_coset_representatives(const PermGroup& g, const PermGroup& k, const PermGroup& h);
/// s H s^-1.
PermGroup conjugate_subgroup(const PermGroup& h, const Perm& s);
PermGroup intersection(const PermGroup& a, const PermGroup& b);

}  // namespace kring::oracle
