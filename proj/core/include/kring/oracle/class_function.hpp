#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "kring/oracle/perm_group.hpp"

namespace kring::oracle {

using Value = mpq_class;

/// A rational class function: one value per conjugacy class of its group.
/// Holds a pointer to the group, which must outlive it.
class ClassFunction {
 public:
  ClassFunction(const PermGroup& g, std::vector<Value> values);
  /// Evaluates `f` on each class representative.
  static ClassFunction from_function(const PermGroup& g, const std::function<Value(const Perm&)>& f);
  static ClassFunction constant(const PermGroup& g, const Value& c);

  const PermGroup& group() const { return *group_; }
  const std::vector<Value>& values() const { return values_; }
  /// Value at an element of the group.
  const Value& at(const Perm& x) const { return values_[group_->class_of(x)]; }
  /// Value at the identity.
  const Value& degree() const { return values_.front(); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Value& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Value& c) { return a *= c; }
  bool operator==(const ClassFunction& o) const { return group_ == o.group_ && values_ == o.values_; }

 private:
  void check_same_group(const ClassFunction& o) const;
  const PermGroup* group_;
  std::vector<Value> values_;
};

/// (1/|G|) sum_g a(g) b(g^-1).
Value inner(const ClassFunction& a, const ClassFunction& b);

/// Restriction to a subgroup h of f's group.
ClassFunction restrict_to(const ClassFunction& f, const PermGroup& h);

/// Ind_H^G f = sum over left coset representatives r of f(r^-1 g r), with f
/// taken as zero off H. Throws std::invalid_argument unless H <= G.
ClassFunction induce(const ClassFunction& f, const PermGroup& g);

/// Fixed points of the natural action on {0..n-1}.
ClassFunction permutation_character(const PermGroup& g);
/// Fixed points of the action on the left cosets G/H (equals Ind_H^G 1).
ClassFunction coset_permutation_character(const PermGroup& g, const PermGroup& h);

/// f^s on s H s^-1: x -> f(s^-1 x s).
ClassFunction conjugate(const ClassFunction& f, const PermGroup& conjugated, const Perm& s);

/// V^{(x) k} with the permutation action as a class function on
/// `wreath` = base wr S_k (built by build_wreath_of): the product over the
/// cycles of the block permutation of f at the cycle product.
ClassFunction power_character(const ClassFunction& f, const PermGroup& wreath, int k);
/// W pulled back along base wr S_k -> S_k; `w` lives on S_k.
ClassFunction pullback_character(const ClassFunction& w, const PermGroup& wreath, int k);

/// The block permutation of an element of base wr S_k, base of degree d.
Perm block_permutation(const Perm& x, int d, int k);
/// The base element carried from block b to the block it is sent to.
Perm block_component(const Perm& x, int d, int b);

}  // namespace kring::oracle
