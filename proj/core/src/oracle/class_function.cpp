#include "kring/oracle/class_function.hpp"

#include <stdexcept>

namespace kring::oracle {

ClassFunction::ClassFunction(const PermGroup& g, std::vector<Value> values) : group_(&g), values_(std::move(values)) {
  if (values_.size() != g.classes().size()) throw std::invalid_argument("ClassFunction: one value per class required");
}

ClassFunction ClassFunction::from_function(const PermGroup& g, const std::function<Value(const Perm&)>& f) {
  std::vector<Value> v;
  for (const auto& c : g.classes()) v.push_back(f(c.representative));
  return ClassFunction(g, std::move(v));
}

ClassFunction ClassFunction::constant(const PermGroup& g, const Value& c) {
  return ClassFunction(g, std::vector<Value>(g.classes().size(), c));
}

void ClassFunction::check_same_group(const ClassFunction& o) const {
  if (group_ != o.group_) throw std::invalid_argument("ClassFunction: different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Value& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

Value inner(const ClassFunction& a, const ClassFunction& b) {
  if (&a.group() != &b.group()) throw std::invalid_argument("inner: different groups");
  const PermGroup& g = a.group();
  Value sum = 0;
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    const auto& c = g.classes()[i];
    sum += Value(static_cast<unsigned long>(c.size)) * a.values()[i] * b.at(inverse(c.representative));
  }
  return sum / Value(static_cast<unsigned long>(g.order()));
}

ClassFunction restrict_to(const ClassFunction& f, const PermGroup& h) {
  if (!h.is_subgroup_of(f.group())) throw std::invalid_argument("restrict_to: not a subgroup");
  return ClassFunction::from_function(h, [&](const Perm& x) { return f.at(x); });
}

ClassFunction induce(const ClassFunction& f, const PermGroup& g) {
  const PermGroup& h = f.group();
  const auto reps = left_coset_representatives(g, h);
  std::vector<Perm> rep_inverses;
  for (const auto& r : reps) rep_inverses.push_back(inverse(r));
  return ClassFunction::from_function(g, [&](const Perm& x) {
    Value sum = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Perm y = compose(compose(rep_inverses[i], x), reps[i]);
      if (h.contains(y)) sum += f.at(y);
    }
    return sum;
  });
}

ClassFunction permutation_character(const PermGroup& g) {
  return ClassFunction::from_function(g, [](const Perm& x) { return Value(fixed_points(x)); });
}

ClassFunction coset_permutation_character(const PermGroup& g, const PermGroup& h) {
  const auto reps = left_coset_representatives(g, h);
  return ClassFunction::from_function(g, [&](const Perm& x) {
    long count = 0;
    for (const auto& r : reps)
      if (h.contains(compose(compose(inverse(r), x), r))) ++count;
    return Value(count);
  });
}

ClassFunction conjugate(const ClassFunction& f, const PermGroup& conjugated, const Perm& s) {
  const Perm si = inverse(s);
  return ClassFunction::from_function(conjugated, [&](const Perm& x) { return f.at(compose(compose(si, x), s)); });
}

Perm block_permutation(const Perm& x, int d, int k) {
  Perm sigma(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) sigma[b] = x[static_cast<std::size_t>(b * d)] / d;
  return sigma;
}

Perm block_component(const Perm& x, int d, int b) {
  Perm g(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) g[i] = x[static_cast<std::size_t>(b * d + i)] % d;
  return g;
}

ClassFunction power_character(const ClassFunction& f, const PermGroup& wreath, int k) {
  const int d = f.group().degree();
  if (wreath.degree() != d * k) throw std::invalid_argument("power_character: degree mismatch");
  return ClassFunction::from_function(wreath, [&](const Perm& x) {
    const Perm sigma = block_permutation(x, d, k);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    Value product = 1;
    for (int b = 0; b < k; ++b) {
      if (seen[b]) continue;
      // Product of the components along the cycle, applied in order b, sigma(b), ...
      Perm h = identity_perm(d);
      for (int c = b; !seen[c]; c = sigma[c]) {
        seen[c] = true;
        h = compose(block_component(x, d, c), h);
      }
      product *= f.at(h);
    }
    return product;
  });
}

ClassFunction pullback_character(const ClassFunction& w, const PermGroup& wreath, int k) {
  if (w.group().degree() != k || k == 0 || wreath.degree() % k != 0)
    throw std::invalid_argument("pullback_character: degree mismatch");
  const int d = wreath.degree() / k;
  return ClassFunction::from_function(wreath, [&](const Perm& x) { return w.at(block_permutation(x, d, k)); });
}

}  // namespace kring::oracle
