#include "kring/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "kring/characters.hpp"
#include "kring/tensor_sym.hpp"

namespace kring {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::homogeneous: return 'h';
    case Basis::power: return 'p';
    case Basis::schur: return 's';
  }
  return '?';
}

std::optional<Basis> basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'e': return Basis::elementary;
    case 'h': return Basis::homogeneous;
    case 'p': return Basis::power;
    case 's': return Basis::schur;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// SymFunc

void SymFunc::add_term(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc SymFunc::constant(const Rational& c) {
  SymFunc f;
  f.add_term(Partition{}, c);
  return f;
}

SymFunc SymFunc::power(const Partition& lambda) {
  SymFunc f;
  f.add_term(lambda, 1);
  return f;
}

SymFunc SymFunc::from_power_terms(Terms terms) {
  SymFunc f;
  for (auto& [p, c] : terms) f.add_term(p, c);
  return f;
}

SymFunc SymFunc::basis_element(Basis b, const Partition& lambda) {
  if (b == Basis::power) return power(lambda);
  const Transition& t = transition(b, lambda.size());
  const auto& row = t.to_power[partition_index(lambda)];
  SymFunc f;
  for (std::size_t j = 0; j < row.size(); ++j) f.add_term(t.partitions[j], row[j]);
  return f;
}

SymFunc SymFunc::from_expansion(const Expansion& e) {
  if (e.basis == Basis::power) return from_power_terms(e.terms);
  SymFunc f;
  for (const auto& [lambda, c] : e.terms) {
    const Transition& t = transition(e.basis, lambda.size());
    const auto& row = t.to_power[partition_index(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) f.add_term(t.partitions[j], c * row[j]);
  }
  return f;
}

int SymFunc::max_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, p.size());
  return d;
}

bool SymFunc::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.size() == n; });
}

SymFunc SymFunc::degree_part(int n) const {
  SymFunc out;
  for (const auto& [p, c] : terms_)
    if (p.size() == n) out.terms_.emplace(p, c);
  return out;
}

SymFunc SymFunc::truncated(int max_degree) const {
  SymFunc out;
  for (const auto& [p, c] : terms_)
    if (p.size() <= max_degree) out.terms_.emplace(p, c);
  return out;
}

Expansion SymFunc::expand(Basis b) const {
  Expansion out{b, {}};
  if (b == Basis::power) {
    out.terms = terms_;
    return out;
  }
  // Terms are ordered by degree, so each degree is one contiguous run.
  auto it = terms_.begin();
  while (it != terms_.end()) {
    const int n = it->first.size();
    const Transition& t = transition(b, n);
    std::vector<Rational> acc(t.partitions.size(), 0);
    for (; it != terms_.end() && it->first.size() == n; ++it) {
      const auto& row = t.from_power[partition_index(it->first)];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) acc[j] += it->second * row[j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (acc[j] != 0) out.terms.emplace(t.partitions[j], acc[j]);
  }
  return out;
}

IntegralTerms SymFunc::expand_integral(Basis b) const {
  IntegralTerms out;
  for (const auto& [p, c] : expand(b).terms) {
    if (!is_integral(c))
      throw IntegralityError(std::string("non-integral coefficient ") + to_string(c) + " of " +
                             basis_letter(b) + p.to_string());
    out.emplace(p, c.get_num());
  }
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

// ---------------------------------------------------------------------------
// Operations

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  return multiply_truncated(f, g, std::numeric_limits<int>::max());
}

SymFunc multiply_truncated(const SymFunc& f, const SymFunc& g, int max_degree) {
  SymFunc::Terms acc;
  for (const auto& [pf, cf] : f.power_terms()) {
    for (const auto& [pg, cg] : g.power_terms()) {
      if (pf.size() + pg.size() > max_degree) continue;
      Rational c = cf * cg;
      auto [it, inserted] = acc.try_emplace(pf.merged(pg), c);
      if (!inserted) it->second += c;
    }
  }
  return SymFunc::from_power_terms(std::move(acc));
}

namespace {

// All ways to split the multiset of parts of lambda into (left, right),
// together with the number of ordered choices realizing each split.
void split_parts(const std::vector<std::pair<int, int>>& groups, std::size_t idx, std::vector<int>& left,
                 std::vector<int>& right, const Integer& weight,
                 std::vector<std::tuple<Partition, Partition, Integer>>& out) {
  if (idx == groups.size()) {
    out.emplace_back(Partition(left), Partition(right), weight);
    return;
  }
  const auto [value, mult] = groups[idx];
  for (int j = 0; j <= mult; ++j) {
    for (int t = 0; t < j; ++t) left.push_back(value);
    for (int t = 0; t < mult - j; ++t) right.push_back(value);
    split_parts(groups, idx + 1, left, right, weight * binomial(mult, j), out);
    left.resize(left.size() - static_cast<std::size_t>(j));
    right.resize(right.size() - static_cast<std::size_t>(mult - j));
  }
}

}  // namespace

TensorSym coproduct(const SymFunc& f) {
  TensorSym out(2);
  for (const auto& [lambda, c] : f.power_terms()) {
    std::vector<std::pair<int, int>> groups;
    for (int v : lambda.parts()) {
      if (!groups.empty() && groups.back().first == v) ++groups.back().second;
      else groups.emplace_back(v, 1);
    }
    std::vector<std::tuple<Partition, Partition, Integer>> splits;
    std::vector<int> left, right;
    split_parts(groups, 0, left, right, 1, splits);
    for (auto& [l, r, w] : splits) out.add_term({l, r}, c * Rational(w));
  }
  return out;
}

Rational hall_inner(const SymFunc& f, const SymFunc& g) {
  Rational acc = 0;
  const auto& ft = f.power_terms();
  const auto& gt = g.power_terms();
  for (const auto& [p, c] : ft) {
    auto it = gt.find(p);
    if (it != gt.end()) acc += c * it->second * Rational(p.z());
  }
  return acc;
}

SymFunc adams(const SymFunc& f, int n) {
  if (n < 1) throw std::invalid_argument("adams: index must be positive");
  SymFunc::Terms out;
  for (const auto& [p, c] : f.power_terms()) out.emplace(p.scaled(n), c);
  return SymFunc::from_power_terms(std::move(out));
}

namespace {

class PlethysmProducts {
 public:
  explicit PlethysmProducts(const SymFunc& g) : g_(g) {}

  const SymFunc& product(const Partition& lambda) {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    SymFunc value;
    if (lambda.empty()) {
      value = SymFunc::one();
    } else {
      std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
      value = multiply(adams_of(lambda[0]), product(Partition(std::move(rest))));
    }
    return cache_.emplace(lambda, std::move(value)).first->second;
  }

 private:
  const SymFunc& adams_of(int r) {
    auto it = adams_.find(r);
    if (it != adams_.end()) return it->second;
    return adams_.emplace(r, adams(g_, r)).first->second;
  }

  const SymFunc& g_;
  std::map<int, SymFunc> adams_;
  std::map<Partition, SymFunc> cache_;
};

}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  PlethysmProducts products(g);
  SymFunc out;
  for (const auto& [lambda, c] : f.power_terms()) out += c * products.product(lambda);
  return out;
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  SymFunc::Terms out;
  const auto& gt = g.power_terms();
  for (const auto& [p, c] : f.power_terms()) {
    auto it = gt.find(p);
    if (it != gt.end()) out.emplace(p, c * it->second * Rational(p.z()));
  }
  return SymFunc::from_power_terms(std::move(out));
}

SymFunc omega(const SymFunc& f) {
  SymFunc::Terms out;
  for (const auto& [p, c] : f.power_terms()) out.emplace(p, p.sign() > 0 ? Rational(c) : Rational(-c));
  return SymFunc::from_power_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson tableaux

namespace {

class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu) {
    for (int r = 0; r < nu.length(); ++r)
      for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lambda.part_or_zero(static_cast<std::size_t>(r)); --c)
        cells_.emplace_back(r, c);
    filling_.assign(static_cast<std::size_t>(nu.length()),
                    std::vector<int>(static_cast<std::size_t>(nu.empty() ? 0 : nu[0]), 0));
    counts_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
  }

  Integer count() { return recurse(0); }

 private:
  Integer recurse(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int hi = mu_.length();
    // Rows weakly increase left to right; the right neighbour is already filled.
    if (c + 1 < nu_[ur]) hi = std::min(hi, filling_[ur][uc + 1]);
    int lo = 1;
    // Columns strictly increase downwards.
    if (r > 0 && c >= lambda_.part_or_zero(ur - 1)) lo = filling_[ur - 1][uc] + 1;
    Integer total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (counts_[uv] >= mu_[uv - 1]) continue;
      if (v > 1 && counts_[uv] + 1 > counts_[uv - 1]) continue;  // lattice word condition
      ++counts_[uv];
      filling_[ur][uc] = v;
      total += recurse(idx + 1);
      filling_[ur][uc] = 0;
      --counts_[uv];
    }
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> counts_;
};

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  return LrCounter(lambda, mu, nu).count();
}

IntegralTerms lr_product(const Partition& lambda, const Partition& mu) {
  IntegralTerms out;
  for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
    Integer c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transition matrices

namespace {

// Number of ways to distribute the parts of rho into the rows of lambda so that
// row i receives parts summing to lambda_i: the coefficient of m_lambda in p_rho.
Integer monomial_count(const Partition& rho, const Partition& lambda) {
  std::vector<int> room(lambda.parts());
  std::function<Integer(std::size_t)> place = [&](std::size_t i) -> Integer {
    if (i == rho.parts().size()) return 1;
    Integer total = 0;
    for (auto& r : room) {
      if (r >= rho[i]) {
        r -= rho[i];
        total += place(i + 1);
        r += rho[i];
      }
    }
    return total;
  };
  return place(0);
}

std::unique_ptr<Transition> build_transition(Basis b, int n) {
  auto t = std::make_unique<Transition>();
  t->partitions = partitions_of(n);
  const std::size_t dim = t->partitions.size();
  t->to_power.assign(dim, std::vector<Rational>(dim, 0));
  t->from_power.assign(dim, std::vector<Rational>(dim, 0));
  const auto& parts = t->partitions;

  switch (b) {
    case Basis::power:
      for (std::size_t i = 0; i < dim; ++i) t->to_power[i][i] = t->from_power[i][i] = 1;
      break;
    case Basis::schur: {
      const CharacterTable& chi = character_table(n);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          t->to_power[i][j] = Rational(chi.values[i][j]) / Rational(parts[j].z());
          t->from_power[j][i] = Rational(chi.values[i][j]);
        }
      break;
    }
    case Basis::monomial: {
      // p_rho = sum_lambda P[rho][lambda] m_lambda is lower triangular in the
      // descending-lex index order (lambda dominates rho).
      auto& P = t->from_power;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) P[i][j] = Rational(monomial_count(parts[i], parts[j]));
      auto& X = t->to_power;
      for (std::size_t j = 0; j < dim; ++j) {
        X[j][j] = 1 / P[j][j];
        for (std::size_t i = j + 1; i < dim; ++i) {
          Rational acc = 0;
          for (std::size_t k = j; k < i; ++k)
            if (P[i][k] != 0 && X[k][j] != 0) acc += P[i][k] * X[k][j];
          X[i][j] = -acc / P[i][i];
        }
      }
      break;
    }
    case Basis::homogeneous:
    case Basis::elementary: {
      const Transition& m = transition(Basis::monomial, n);
      // h_n = sum_rho p_rho / z_rho; coefficient of h_lambda in f is <f, m_lambda>.
      std::vector<SymFunc> hn(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) {
        SymFunc::Terms terms;
        for (const auto& rho : partitions_of(k)) terms.emplace(rho, 1 / Rational(rho.z()));
        hn[static_cast<std::size_t>(k)] = SymFunc::from_power_terms(std::move(terms));
      }
      for (std::size_t i = 0; i < dim; ++i) {
        SymFunc prod = SymFunc::one();
        for (int part : parts[i].parts()) prod = multiply(prod, hn[static_cast<std::size_t>(part)]);
        for (const auto& [rho, c] : prod.power_terms()) t->to_power[i][partition_index(rho)] = c;
      }
      for (std::size_t r = 0; r < dim; ++r) {
        Rational z(parts[r].z());
        for (std::size_t l = 0; l < dim; ++l) t->from_power[r][l] = z * m.to_power[l][r];
      }
      if (b == Basis::elementary) {
        for (std::size_t r = 0; r < dim; ++r) {
          if (parts[r].sign() > 0) continue;
          for (std::size_t l = 0; l < dim; ++l) {
            t->to_power[l][r] = -t->to_power[l][r];
            t->from_power[r][l] = -t->from_power[r][l];
          }
        }
      }
      break;
    }
  }
  return t;
}

}  // namespace

const Transition& transition(Basis b, int n) {
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Transition>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<int>(b), n}];
  if (!slot) slot = build_transition(b, n);
  return *slot;
}

Expansion convert(const Expansion& e, Basis to) { return SymFunc::from_expansion(e).expand(to); }

}  // namespace kring
