#include "kring/oracle/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace kring::oracle {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

std::vector<int> cycle_type(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<int> out;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(a[x])) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int fixed_points(const Perm& a) {
  int n = 0;
  for (std::size_t x = 0; x < a.size(); ++x) n += a[x] == static_cast<int>(x);
  return n;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t max_order)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (static_cast<int>(g.size()) != degree_) throw std::invalid_argument("PermGroup: generator of wrong degree");
  std::set<Perm> seen{identity_perm(degree_)};
  std::deque<Perm> frontier{identity_perm(degree_)};
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators_) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw OrderGuardError("PermGroup: more than " + std::to_string(max_order) + " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  // Closure under the generators of a finite set containing 1 is a group;
  // spot-check products anyway.
  for (const auto& g : generators_)
    for (const auto& x : elements_)
      if (!contains(compose(x, g))) throw std::logic_error("PermGroup: element list is not closed");
  enumerate_classes();
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  if (g.elements_.empty() || g.elements_.front() != identity_perm(degree))
    throw std::invalid_argument("PermGroup: element list lacks the identity");
  for (const auto& a : g.elements_)
    for (const auto& b : g.elements_)
      if (!g.contains(compose(a, b))) throw std::invalid_argument("PermGroup: element list is not closed");
  g.generators_ = g.elements_;
  g.enumerate_classes();
  return g;
}

bool PermGroup::contains(const Perm& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::size_t PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) throw std::invalid_argument("PermGroup: element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

void PermGroup::enumerate_classes() {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  class_index_.assign(elements_.size(), unset);
  // Conjugation orbits under the generators are full conjugacy classes.
  std::vector<Perm> conjugators = generators_;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_index_[i] != unset) continue;
    const std::size_t id = classes_.size();
    std::size_t size = 0;
    std::vector<std::size_t> stack{i};
    class_index_[i] = id;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& s : conjugators) {
        std::size_t j = index_of(compose(compose(s, elements_[cur]), inverse(s)));
        if (class_index_[j] == unset) {
          class_index_[j] = id;
          stack.push_back(j);
        }
      }
    }
    classes_.push_back({elements_[i], size});
  }
}

std::size_t PermGroup::class_of(const Perm& g) const { return class_index_[index_of(g)]; }

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& x) { return g.contains(x); });
}

PermGroup build_symmetric(int n) {
  if (n < 0) throw std::invalid_argument("build_symmetric: negative degree");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    Perm c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return PermGroup(n, gens);
}

PermGroup build_young(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("build_young: negative block");
    n += b;
  }
  std::vector<Perm> gens;
  int start = 0;
  for (int b : blocks) {
    if (b >= 2) {
      Perm t = identity_perm(n);
      std::swap(t[start], t[start + 1]);
      gens.push_back(t);
      Perm c = identity_perm(n);
      for (int i = 0; i < b; ++i) c[start + i] = start + (i + 1) % b;
      gens.push_back(c);
    }
    start += b;
  }
  return PermGroup(n, gens);
}

PermGroup build_wreath_of(const PermGroup& base, int k) {
  if (k < 0) throw std::invalid_argument("build_wreath_of: negative k");
  const int d = base.degree();
  const int n = d * k;
  std::vector<Perm> gens;
  if (k >= 1)
    for (const auto& g : base.generators()) {
      Perm p = identity_perm(n);
      for (int x = 0; x < d; ++x) p[x] = g[x];
      gens.push_back(p);
    }
  auto block_perm = [&](const std::vector<int>& sigma) {
    Perm p(static_cast<std::size_t>(n));
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < d; ++x) p[b * d + x] = sigma[b] * d + x;
    return p;
  };
  if (k >= 2 && d >= 1) {
    std::vector<int> swap(static_cast<std::size_t>(k)), cycle(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
      swap[b] = b;
      cycle[b] = (b + 1) % k;
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(block_perm(swap));
    gens.push_back(block_perm(cycle));
  }
  return PermGroup(n, gens);
}

PermGroup build_wreath(int l, int k) { return build_wreath_of(build_symmetric(l), k); }

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const int da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    Perm p = identity_perm(da + db);
    for (int x = 0; x < da; ++x) p[x] = g[x];
    gens.push_back(p);
  }
  for (const auto& g : b.generators()) {
    Perm p = identity_perm(da + db);
    for (int x = 0; x < db; ++x) p[da + x] = da + g[x];
    gens.push_back(p);
  }
  return PermGroup(da + db, gens);
}

std::vector<Perm> left_coset_representatives(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("coset representatives: H is not a subgroup of G");
  std::vector<bool> covered(g.order(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    const Perm& x = g.elements()[i];
    reps.push_back(x);
    for (const auto& y : h.elements()) covered[g.index_of(compose(x, y))] = true;
  }
  return reps;
}

std::vector<Perm> double_coset_representatives(const PermGroup& g, const PermGroup& k, const PermGroup& h) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g))
    throw std::invalid_argument("double cosets: subgroups not inside G");
  // K x H is the orbit of x under left multiplication by K's generators and
  // right multiplication by H's.
  std::vector<bool> covered(g.order(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    reps.push_back(g.elements()[i]);
    covered[i] = true;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const Perm y = g.elements()[frontier.back()];
      frontier.pop_back();
      auto visit = [&](const Perm& z) {
        const std::size_t j = g.index_of(z);
        if (!covered[j]) {
          covered[j] = true;
          frontier.push_back(j);
        }
      };
      for (const auto& a : k.generators()) visit(compose(a, y));
      for (const auto& b : h.generators()) visit(compose(y, b));
    }
  }
  return reps;
}

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& s) {
  const Perm si = inverse(s);
  std::vector<Perm> els;
  for (const auto& x : h.elements()) els.push_back(compose(compose(s, x), si));
  return PermGroup::from_elements(h.degree(), std::move(els));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> els;
  for (const auto& x : a.elements())
    if (b.contains(x)) els.push_back(x);
  return PermGroup::from_elements(a.degree(), std::move(els));
}

}  // namespace kring::oracle
