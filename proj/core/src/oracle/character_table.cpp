#include "kring/oracle/character_table.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace kring::oracle {

std::vector<std::vector<int>> partition_list(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<ClassFunction> irreducible_table(const PermGroup& g, std::vector<ClassFunction> seeds) {
  const std::size_t target = g.classes().size();
  std::vector<ClassFunction> irr;
  auto reduce = [&](ClassFunction f) {
    for (const auto& chi : irr) {
      Value c = inner(f, chi);
      if (c != 0) f -= chi * c;
    }
    return f;
  };
  auto is_zero = [](const ClassFunction& f) {
    for (const auto& v : f.values())
      if (v != 0) return false;
    return true;
  };
  auto try_add = [&](const ClassFunction& f) {
    ClassFunction r = reduce(f);
    if (inner(r, r) != 1) return false;
    if (r.degree() < 0) r *= Value(-1);
    for (const auto& v : r.values())
      if (v.get_den() != 1) return false;
    irr.push_back(r);
    return true;
  };

  std::vector<ClassFunction> pool = std::move(seeds);
  for (int round = 0; round < 6 && irr.size() < target; ++round) {
    for (bool progress = true; progress && irr.size() < target;) {
      progress = false;
      for (const auto& p : pool)
        if (irr.size() < target && try_add(p)) progress = true;
    }
    if (irr.size() >= target) break;
    std::vector<ClassFunction> remainders;
    for (const auto& p : pool) {
      ClassFunction r = reduce(p);
      if (!is_zero(r)) remainders.push_back(r);
    }
    std::vector<ClassFunction> next = remainders;
    for (std::size_t i = 0; i < remainders.size(); ++i)
      for (std::size_t j = i + 1; j < remainders.size(); ++j) next.push_back(remainders[i] - remainders[j]);
    for (const auto& chi : irr)
      for (const auto& r : remainders) next.push_back(chi * r);
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = i; j < irr.size(); ++j) next.push_back(irr[i] * irr[j]);
    pool = std::move(next);
  }
  if (irr.size() != target)
    throw std::runtime_error("irreducible_table: seeds found " + std::to_string(irr.size()) + " of " +
                             std::to_string(target) + " irreducible characters");
  return irr;
}

const SymmetricTable& symmetric_table(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_table: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SymmetricTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot) return *slot;

  auto table = std::make_unique<SymmetricTable>();
  table->group = std::make_shared<const PermGroup>(build_symmetric(n));
  const PermGroup& g = *table->group;
  // Ind_{S_lambda}^{S_n} 1 contains chi^lambda once, beside characters of
  // lexicographically larger shapes, which are already known.
  for (const auto& lambda : partition_list(n)) {
    PermGroup young = build_young(lambda);
    ClassFunction r = coset_permutation_character(g, young);
    for (const auto& chi : table->characters) r -= chi * inner(r, chi);
    if (inner(r, r) != 1 || r.degree() <= 0)
      throw std::logic_error("symmetric_table: Young character remainder is not irreducible");
    table->labels.push_back(lambda);
    table->characters.push_back(r);
  }
  slot = std::move(table);
  return *slot;
}

namespace {

// Power of V times pullback of W on a block range of a wreath element.
Value block_seed_value(const Perm& x, int l, int first_block, int blocks, const ClassFunction& v,
                       const ClassFunction& w) {
  const int n = l * blocks;
  Perm local(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) local[i] = x[static_cast<std::size_t>(first_block * l + i)] - first_block * l;
  const Perm sigma = block_permutation(local, l, blocks);
  std::vector<bool> seen(static_cast<std::size_t>(blocks), false);
  Value product = w.at(sigma);
  for (int b = 0; b < blocks; ++b) {
    if (seen[b]) continue;
    Perm h = identity_perm(l);
    for (int c = b; !seen[c]; c = sigma[c]) {
      seen[c] = true;
      h = compose(block_component(local, l, c), h);
    }
    product *= v.at(h);
  }
  return product;
}

}  // namespace

const WreathTable& wreath_table(int l, int k) {
  if (l < 1 || k < 1) throw std::invalid_argument("wreath_table: l and k must be positive");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<WreathTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({l, k});
    if (it != cache.end()) return *it->second;
  }

  auto table = std::make_unique<WreathTable>();
  table->l = l;
  table->k = k;
  table->group = std::make_shared<const PermGroup>(build_wreath(l, k));
  const PermGroup& g = *table->group;
  const auto& base = symmetric_table(l).characters;

  std::vector<ClassFunction> seeds;
  for (const auto& v : base)
    for (const auto& w : symmetric_table(k).characters)
      seeds.push_back(ClassFunction::from_function(g, [&](const Perm& x) -> Value { return block_seed_value(x, l, 0, k, v, w); }));
  for (const auto& chi : symmetric_table(l * k).characters) seeds.push_back(restrict_to(chi, g));
  for (int i = k - 1; i >= (k + 1) / 2; --i) {
    const int j = k - i;
    const PermGroup h = direct_product(build_wreath(l, i), build_wreath(l, j));
    for (const auto& v1 : base)
      for (const auto& w1 : symmetric_table(i).characters)
        for (const auto& v2 : base)
          for (const auto& w2 : symmetric_table(j).characters) {
            ClassFunction f = ClassFunction::from_function(h, [&](const Perm& x) -> Value {
              return block_seed_value(x, l, 0, i, v1, w1) * block_seed_value(x, l, i, j, v2, w2);
            });
            seeds.push_back(induce(f, g));
          }
  }
  table->characters = irreducible_table(g, std::move(seeds));

  std::lock_guard lock(mutex);
  auto& slot = cache[{l, k}];
  if (!slot) slot = std::move(table);
  return *slot;
}

}  // namespace kring::oracle
