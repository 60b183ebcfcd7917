#include "kring/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace kring {
namespace {

// Beta-set (first column hook lengths) encoding: removing a rim hook of length r
// moves one bead from b to b - r.
std::vector<int> to_beta(const std::vector<int>& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;  // strictly decreasing
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> lambda;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct Memo {
  std::shared_mutex mu;
  std::map<Key, Integer> values;
};

Memo& memo() {
  static Memo m;
  return m;
}

Integer chi(const std::vector<int>& lambda, const std::vector<int>& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, rho};
  {
    std::shared_lock lock(memo().mu);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  const int r = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  std::vector<int> beta = to_beta(lambda);
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    Integer sub = chi(from_beta(std::move(moved)), rest);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::unique_lock lock(memo().mu);
  memo().values.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character_value: " + lambda.to_string() + " and " + rho.to_string() +
                                " have different sizes");
  return chi(lambda.parts(), rho.parts());
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<CharacterTable>();
    table->n = n;
    table->partitions = partitions_of(n);
    for (const auto& lambda : table->partitions) {
      std::vector<Integer> row;
      row.reserve(table->partitions.size());
      for (const auto& rho : table->partitions) row.push_back(character_value(lambda, rho));
      table->values.push_back(std::move(row));
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace kring
