#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kring/model.hpp"
#include "kring/structure_constants.hpp"

namespace kring {

/// Truncated element of prod_m A (x) R(S_m). Component m maps partitions of m
/// to coefficients in A; zero coefficients are never stored, so equality is
/// structural. The cap is fixed at construction and binary operations demand
/// equal caps.
template <ModelElement A>
class TauSeries {
 public:
  using Component = PartitionMap<A>;

  TauSeries(int cap, A zero) : cap_(cap), zero_(std::move(zero)) {
    if (cap < 0) throw std::invalid_argument("TauSeries: negative cap");
    components_.resize(cap + 1);
  }

  /// 1 (x) e_0.
  static TauSeries unit(int cap, const A& like) {
    TauSeries s(cap, ModelTraits<A>::zero_like(like));
    s.add(Partition{}, ModelTraits<A>::one_like(like));
    return s;
  }

  int cap() const { return cap_; }
  const A& zero() const { return zero_; }

  const Component& component(int m) const {
    check_level(m);
    return components_[m];
  }

  A coefficient(const Partition& mu) const {
    const auto& c = component(mu.size());
    auto it = c.find(mu);
    return it == c.end() ? zero_ : it->second;
  }

  void add(const Partition& mu, const A& a) {
    check_level(mu.size());
    auto& c = components_[mu.size()];
    auto [it, inserted] = c.try_emplace(mu, a);
    if (!inserted) it->second += a;
    if (it->second.is_zero()) c.erase(it);
  }

  bool is_zero() const {
    for (const auto& c : components_)
      if (!c.empty()) return false;
    return true;
  }

  bool operator==(const TauSeries& o) const { return cap_ == o.cap_ && components_ == o.components_; }

 private:
  void check_level(int m) const {
    if (m < 0 || m > cap_)
      throw CapError("tau series level " + std::to_string(m) + " is above the cap " + std::to_string(cap_));
  }

  int cap_;
  A zero_;
  std::vector<Component> components_;
};

struct PartitionPairOrder {
  bool operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const {
    PartitionOrder less;
    if (a.first.size() + a.second.size() != b.first.size() + b.second.size())
      return a.first.size() + a.second.size() < b.first.size() + b.second.size();
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Truncated element of prod_{i,j} A (x) R(S_i) (x) R(S_j), holding the
/// entries with i + j at most the cap.
template <ModelElement A>
class TauSquare {
 public:
  using Key = std::pair<Partition, Partition>;

  TauSquare(int cap, A zero) : cap_(cap), zero_(std::move(zero)) {}

  int cap() const { return cap_; }
  const std::map<Key, A, PartitionPairOrder>& terms() const { return terms_; }

  /// Entries at bidegree (i, j).
  std::map<Key, A, PartitionPairOrder> at(int i, int j) const {
    std::map<Key, A, PartitionPairOrder> out;
    for (const auto& [key, a] : terms_)
      if (key.first.size() == i && key.second.size() == j) out.emplace(key, a);
    return out;
  }

  void add(const Partition& alpha, const Partition& beta, const A& a) {
    if (alpha.size() + beta.size() > cap_) throw CapError("tau square entry above the cap");
    auto [it, inserted] = terms_.try_emplace({alpha, beta}, a);
    if (!inserted) it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool operator==(const TauSquare& o) const { return cap_ == o.cap_ && terms_ == o.terms_; }

 private:
  int cap_;
  A zero_;
  std::map<Key, A, PartitionPairOrder> terms_;
};

/// Truncated element of prod_{l,k} A (x) R(S_l wr S_k), holding only the
/// (l, k) blocks that were requested.
template <ModelElement A>
class TauQ {
 public:
  using Block = MultiPartitionMap<A>;

  explicit TauQ(int cap) : cap_(cap) {}

  int cap() const { return cap_; }
  const std::map<std::pair<int, int>, Block>& blocks() const { return blocks_; }

  const Block& block(int l, int k) const {
    static const Block empty;
    auto it = blocks_.find({l, k});
    return it == blocks_.end() ? empty : it->second;
  }

  void add(const MultiPartition& phi, const A& a) {
    if (phi.l() * phi.k() > cap_) throw CapError("tau q entry above the cap");
    auto& b = blocks_[{phi.l(), phi.k()}];
    auto [it, inserted] = b.try_emplace(phi, a);
    if (!inserted) it->second += a;
    if (it->second.is_zero()) b.erase(it);
  }

  /// Makes the block present even when it is zero.
  void touch(int l, int k) { blocks_[{l, k}]; }

  bool operator==(const TauQ& o) const { return cap_ == o.cap_ && blocks_ == o.blocks_; }

 private:
  int cap_;
  std::map<std::pair<int, int>, Block> blocks_;
};

namespace detail {

inline void require_equal_caps(int a, int b, const char* op) {
  if (a != b)
    throw CapError(std::string(op) + ": series caps differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace detail

/// Component m is sum_{mu of m} (s_mu o x) (x) [mu]. For a genuine x this is
/// delta o P; applied to a virtual x the same formula is the plethystic
/// extension, which tests compare against tau.
template <ModelElement A>
TauSeries<A> tau_closed_form(const A& x, int cap) {
  TauSeries<A> out(cap, ModelTraits<A>::zero_like(x));
  out.add(Partition{}, ModelTraits<A>::one_like(x));
  for (int m = 1; m <= cap; ++m)
    for (const auto& mu : partitions_of(m)) out.add(mu, plethysm(SymFunc::schur(mu), x));
  return out;
}

/// a x b: model coefficients multiply, R-factors by induction product.
template <ModelElement A>
TauSeries<A> cross(const TauSeries<A>& a, const TauSeries<A>& b) {
  detail::require_equal_caps(a.cap(), b.cap(), "cross");
  const int cap = a.cap();
  TauSeries<A> out(cap, a.zero());
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j)
      for (const auto& [alpha, x] : a.component(i))
        for (const auto& [beta, y] : b.component(j)) {
          A xy = x * y;
          if (xy.is_zero()) continue;
          for (const auto& [nu, c] : induction_terms(alpha, beta)) out.add(nu, xy * Rational(c));
        }
  return out;
}

/// The x-inverse of a series whose level-0 part is the unit, solved level by
/// level: b_n = -sum_{i >= 1} (a_i x b_{n-i}) at level n.
template <ModelElement A>
TauSeries<A> cross_inverse(const TauSeries<A>& a) {
  const int cap = a.cap();
  const A one = ModelTraits<A>::one_like(a.zero());
  if (!(a.coefficient(Partition{}) == one))
    throw std::invalid_argument("cross_inverse: level 0 is not the unit");
  TauSeries<A> b(cap, a.zero());
  b.add(Partition{}, one);
  for (int n = 1; n <= cap; ++n)
    for (int i = 1; i <= n; ++i)
      for (const auto& [alpha, x] : a.component(i))
        for (const auto& [beta, y] : b.component(n - i)) {
          A xy = x * y;
          if (xy.is_zero()) continue;
          for (const auto& [nu, c] : induction_terms(alpha, beta)) b.add(nu, xy * Rational(-c));
        }
  return b;
}

/// tau(x): the closed form on the genuine part of x, times the x-inverse of
/// the closed form on the negated negative part.
template <ModelElement A>
TauSeries<A> tau(const A& x, int cap) {
  A positive = ModelTraits<A>::zero_like(x);
  A negative = positive;
  for (const auto& [b, c] : ModelTraits<A>::basis_terms(x)) {
    if (c > 0)
      positive += b * Rational(c);
    else
      negative += b * Rational(-c);
  }
  TauSeries<A> out = tau_closed_form(positive, cap);
  if (!negative.is_zero()) out = cross(out, cross_inverse(tau_closed_form(negative, cap)));
  return out;
}

/// a . b: levelwise, model coefficients multiply and R-factors by internal
/// (Kronecker) product.
template <ModelElement A>
TauSeries<A> dot(const TauSeries<A>& a, const TauSeries<A>& b) {
  detail::require_equal_caps(a.cap(), b.cap(), "dot");
  TauSeries<A> out(a.cap(), a.zero());
  for (int m = 0; m <= a.cap(); ++m)
    for (const auto& [alpha, x] : a.component(m))
      for (const auto& [beta, y] : b.component(m)) {
        A xy = x * y;
        if (xy.is_zero()) continue;
        for (const auto& [nu, c] : internal_terms(alpha, beta)) out.add(nu, xy * Rational(c));
      }
  return out;
}

/// Delta: restriction coproduct on each R-factor.
template <ModelElement A>
TauSquare<A> coproduct_delta(const TauSeries<A>& a) {
  TauSquare<A> out(a.cap(), a.zero());
  for (int m = 0; m <= a.cap(); ++m)
    for (const auto& [nu, x] : a.component(m))
      for (const auto& t : restriction_terms(nu)) out.add(t.left, t.right, x * Rational(t.coefficient));
  return out;
}

/// mu(a, b): outer product, model coefficients multiplied; entries above the
/// cap are never formed.
template <ModelElement A>
TauSquare<A> mu(const TauSeries<A>& a, const TauSeries<A>& b) {
  detail::require_equal_caps(a.cap(), b.cap(), "mu");
  const int cap = a.cap();
  TauSquare<A> out(cap, a.zero());
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j)
      for (const auto& [alpha, x] : a.component(i))
        for (const auto& [beta, y] : b.component(j)) out.add(alpha, beta, x * y);
  return out;
}

/// box: restriction from S_{lk} to S_l wr S_k on the R-factor of level lk,
/// for each requested (l, k).
template <ModelElement A>
TauQ<A> box(const TauSeries<A>& a, const std::vector<std::pair<int, int>>& blocks) {
  TauQ<A> out(a.cap());
  for (const auto& [l, k] : blocks) {
    if (l * k > a.cap()) throw CapError("box: block (" + std::to_string(l) + "," + std::to_string(k) + ") above the cap");
    out.touch(l, k);
    for (const auto& [nu, x] : a.component(l * k))
      for (const auto& [phi, c] : wreath_restriction_terms(nu, l, k).coeffs()) out.add(phi, x * Rational(c));
  }
  return out;
}

namespace detail {

// One (l, k) block of a wreath-side series, indexed by k.
template <ModelElement A>
using WreathLevels = std::vector<MultiPartitionMap<A>>;

template <ModelElement A>
void add_wreath(MultiPartitionMap<A>& level, const MultiPartition& phi, const A& a) {
  auto [it, inserted] = level.try_emplace(phi, a);
  if (!inserted) it->second += a;
  if (it->second.is_zero()) level.erase(it);
}

template <ModelElement A>
WreathLevels<A> wreath_levels_cross(const WreathLevels<A>& a, const WreathLevels<A>& b) {
  const int top = static_cast<int>(a.size()) - 1;
  WreathLevels<A> out(top + 1);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j)
      for (const auto& [p1, x] : a[i])
        for (const auto& [p2, y] : b[j]) {
          A xy = x * y;
          if (xy.is_zero()) continue;
          for (const auto& [phi, c] : wreath_cross_terms(p1, p2).coeffs()) add_wreath(out[i + j], phi, xy * Rational(c));
        }
  return out;
}

}  // namespace detail

/// tau-dot on the level-l part of a, for each requested (l, k). A single term
/// x (x) [mu] maps at level j to sum_kappa tau^j(x)_kappa (x) gamma(p*[kappa],
/// P^j[mu]); a sum of terms maps to the x-product of the images.
template <ModelElement A>
TauQ<A> tau_dot(const TauSeries<A>& a, const std::vector<std::pair<int, int>>& blocks) {
  TauQ<A> out(a.cap());
  const A one = ModelTraits<A>::one_like(a.zero());
  for (const auto& [l, k] : blocks) {
    if (l * k > a.cap())
      throw CapError("tau_dot: block (" + std::to_string(l) + "," + std::to_string(k) + ") above the cap");
    out.touch(l, k);
    detail::WreathLevels<A> total(k + 1);
    total[0].emplace(MultiPartition(l, 0, {}), one);
    for (const auto& [mu_label, x] : a.component(l)) {
      const TauSeries<A> tx = tau(x, k);
      detail::WreathLevels<A> term(k + 1);
      term[0].emplace(MultiPartition(l, 0, {}), one);
      for (int j = 1; j <= k; ++j)
        for (const auto& [kappa, y] : tx.component(j))
          for (const auto& [phi, c] : twisted_power_terms(kappa, mu_label).coeffs())
            detail::add_wreath(term[j], phi, y * Rational(c));
      total = detail::wreath_levels_cross(total, term);
    }
    for (const auto& [phi, y] : total[k]) out.add(phi, y);
  }
  return out;
}

/// g_n: the coefficient of the sign representation (1^n) at level n.
template <ModelElement A>
A sign_coefficient(const TauSeries<A>& a, int n) {
  return a.coefficient(n == 0 ? Partition{} : Partition(std::vector<int>(n, 1)));
}

/// lambda^n(x) = g_n(tau(x)). Throws CapError when n exceeds the cap.
template <ModelElement A>
A lambda_from_tau(const A& x, int n, int cap) {
  if (n < 0) throw std::invalid_argument("lambda_from_tau: negative exponent");
  if (n > cap) throw CapError("lambda_from_tau: exponent " + std::to_string(n) + " above the cap " + std::to_string(cap));
  return sign_coefficient(tau(x, n), n);
}

// ---------------------------------------------------------------------------
// Text rendering

template <ModelElement A>
std::string format_series(const TauSeries<A>& a) {
  std::string out;
  for (int m = 0; m <= a.cap(); ++m) {
    out += "m=" + std::to_string(m) + ":";
    if (a.component(m).empty()) out += " 0";
    for (const auto& [mu, x] : a.component(m)) out += "\n  " + mu.to_string() + " : " + ModelTraits<A>::show(x);
    out += "\n";
  }
  return out;
}

template <ModelElement A>
std::string format_tau_q(const TauQ<A>& q) {
  std::string out;
  for (const auto& [lk, block] : q.blocks()) {
    out += "(l,k)=(" + std::to_string(lk.first) + "," + std::to_string(lk.second) + "):";
    if (block.empty()) out += " 0";
    for (const auto& [phi, x] : block) out += "\n  " + phi.to_string() + " : " + ModelTraits<A>::show(x);
    out += "\n";
  }
  return out;
}

template <ModelElement A>
std::string format_tau_square(const TauSquare<A>& s) {
  std::string out;
  if (s.terms().empty()) return "0\n";
  for (const auto& [key, x] : s.terms())
    out += key.first.to_string() + "#" + key.second.to_string() + " : " + ModelTraits<A>::show(x) + "\n";
  return out;
}

}  // namespace kring
