#include "kring/tensor_sym.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace kring {

namespace {

int total_size(const std::vector<Partition>& key) {
  int s = 0;
  for (const auto& p : key) s += p.size();
  return s;
}

void require_same_factors(const TensorSym& a, const TensorSym& b) {
  if (a.factors() != b.factors()) throw std::invalid_argument("TensorSym: factor count mismatch");
}

}  // namespace

bool PartitionTupleOrder::operator()(const std::vector<Partition>& a, const std::vector<Partition>& b) const {
  const int sa = total_size(a), sb = total_size(b);
  if (sa != sb) return sa < sb;
  PartitionOrder less;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (less(a[i], b[i])) return true;
    if (less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

TensorSym TensorSym::one(int factors) { return constant(factors, 1); }

TensorSym TensorSym::constant(int factors, const Rational& c) {
  TensorSym t(factors);
  t.add_term(Key(static_cast<std::size_t>(factors)), c);
  return t;
}

TensorSym TensorSym::generator(int factors, int index) {
  return embed(factors, index, SymFunc::power(Partition{1}));
}

TensorSym TensorSym::embed(int factors, int index, const SymFunc& f) {
  if (index < 0 || index >= factors) throw std::out_of_range("TensorSym::embed: bad factor index");
  TensorSym t(factors);
  for (const auto& [p, c] : f.power_terms()) {
    Key key(static_cast<std::size_t>(factors));
    key[static_cast<std::size_t>(index)] = p;
    t.add_term(std::move(key), c);
  }
  return t;
}

TensorSym TensorSym::pure(const std::vector<SymFunc>& fs) {
  const int g = static_cast<int>(fs.size());
  TensorSym acc = one(g);
  for (int i = 0; i < g; ++i) acc = multiply(acc, embed(g, i, fs[static_cast<std::size_t>(i)]));
  return acc;
}

void TensorSym::add_term(Key key, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(key.size()) != factors_) throw std::invalid_argument("TensorSym: key has wrong arity");
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TensorSym::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, total_size(k));
  return d;
}

TensorSym TensorSym::degree_part(int n) const {
  TensorSym out(factors_);
  for (const auto& [k, c] : terms_)
    if (total_size(k) == n) out.terms_.emplace(k, c);
  return out;
}

namespace {

// Rewrites one tensor factor at a time through a transition matrix.
TensorSym::Terms transform(const TensorSym::Terms& in, int factors, Basis b, bool to_power) {
  TensorSym::Terms cur = in;
  for (int f = 0; f < factors; ++f) {
    TensorSym::Terms next;
    for (const auto& [key, c] : cur) {
      const Partition& p = key[static_cast<std::size_t>(f)];
      const Transition& t = transition(b, p.size());
      const auto& row = to_power ? t.to_power[partition_index(p)] : t.from_power[partition_index(p)];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        auto k2 = key;
        k2[static_cast<std::size_t>(f)] = t.partitions[j];
        Rational v = c * row[j];
        auto [it, inserted] = next.try_emplace(std::move(k2), v);
        if (!inserted) it->second += v;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TensorSym TensorSym::from_expansion(int factors, Basis b, const Terms& terms) {
  TensorSym t(factors);
  Terms power = b == Basis::power ? terms : transform(terms, factors, b, true);
  for (auto& [k, c] : power) t.add_term(k, c);
  return t;
}

TensorSym::Terms TensorSym::expand(Basis b) const {
  if (b == Basis::power) return terms_;
  return transform(terms_, factors_, b, false);
}

PartitionTupleMap<Integer> TensorSym::expand_integral(Basis b) const {
  PartitionTupleMap<Integer> out;
  for (const auto& [k, c] : expand(b)) {
    if (!is_integral(c)) throw IntegralityError("non-integral tensor coefficient " + to_string(c));
    out.emplace(k, c.get_num());
  }
  return out;
}

TensorSym& TensorSym::operator+=(const TensorSym& o) {
  require_same_factors(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorSym& TensorSym::operator-=(const TensorSym& o) {
  require_same_factors(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorSym& TensorSym::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorSym operator*(const TensorSym& a, const TensorSym& b) { return multiply(a, b); }

TensorSym multiply(const TensorSym& a, const TensorSym& b) {
  require_same_factors(a, b);
  TensorSym::Terms acc;
  for (const auto& [ka, ca] : a.power_terms()) {
    for (const auto& [kb, cb] : b.power_terms()) {
      TensorSym::Key key(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] = ka[i].merged(kb[i]);
      Rational v = ca * cb;
      auto [it, inserted] = acc.try_emplace(std::move(key), v);
      if (!inserted) it->second += v;
    }
  }
  TensorSym out(a.factors());
  for (auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

TensorSym adams(const TensorSym& x, int n) {
  if (n < 1) throw std::invalid_argument("adams: index must be positive");
  TensorSym out(x.factors());
  for (const auto& [k, c] : x.power_terms()) {
    TensorSym::Key key;
    key.reserve(k.size());
    for (const auto& p : k) key.push_back(p.scaled(n));
    out.add_term(std::move(key), c);
  }
  return out;
}

TensorSym plethysm(const SymFunc& f, const TensorSym& x) {
  std::map<int, TensorSym> adams_cache;
  std::map<Partition, TensorSym> products;
  auto adams_of = [&](int r) -> const TensorSym& {
    auto it = adams_cache.find(r);
    if (it == adams_cache.end()) it = adams_cache.emplace(r, adams(x, r)).first;
    return it->second;
  };
  std::function<const TensorSym&(const Partition&)> product = [&](const Partition& lambda) -> const TensorSym& {
    auto it = products.find(lambda);
    if (it != products.end()) return it->second;
    TensorSym value = TensorSym::one(x.factors());
    if (!lambda.empty()) {
      std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
      value = multiply(adams_of(lambda[0]), product(Partition(std::move(rest))));
    }
    return products.emplace(lambda, std::move(value)).first->second;
  };
  TensorSym out(x.factors());
  for (const auto& [lambda, c] : f.power_terms()) out += product(lambda) * c;
  return out;
}

Rational hall_inner(const TensorSym& a, const TensorSym& b) {
  require_same_factors(a, b);
  Rational acc = 0;
  for (const auto& [k, c] : a.power_terms()) {
    auto it = b.power_terms().find(k);
    if (it == b.power_terms().end()) continue;
    Integer z = 1;
    for (const auto& p : k) z *= p.z();
    acc += c * it->second * Rational(z);
  }
  return acc;
}

}  // namespace kring
