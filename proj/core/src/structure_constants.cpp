#include "kring/structure_constants.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace kring {

namespace {

// A map guarded by one mutex; std::map nodes never move, so references to
// stored values stay valid after the lock is released.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
 public:
  template <class Make>
  const Value& get(const Key& key, Make make) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = make();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

struct MultiPartitionPairOrder {
  bool operator()(const std::pair<MultiPartition, MultiPartition>& a,
                  const std::pair<MultiPartition, MultiPartition>& b) const {
    MultiPartitionOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

}  // namespace

const IntegralTerms& induction_terms(const Partition& alpha, const Partition& beta) {
  static Memo<std::pair<Partition, Partition>, IntegralTerms> memo;
  return memo.get({alpha, beta}, [&] { return lr_product(alpha, beta); });
}

const IntegralTerms& internal_terms(const Partition& alpha, const Partition& beta) {
  static Memo<std::pair<Partition, Partition>, IntegralTerms> memo;
  return memo.get({alpha, beta}, [&] {
    RepSn r = internal_product(RepSn::irreducible(alpha), RepSn::irreducible(beta));
    return IntegralTerms(r.coeffs().begin(), r.coeffs().end());
  });
}

const std::vector<RestrictionTerm>& restriction_terms(const Partition& nu) {
  static Memo<Partition, std::vector<RestrictionTerm>> memo;
  return memo.get(nu, [&] {
    std::vector<RestrictionTerm> out;
    for (const auto& level : restriction_coproduct(RepSn::irreducible(nu)))
      for (const auto& [pair, c] : level) out.push_back({pair.first, pair.second, c});
    return out;
  });
}

const WreathRep& wreath_restriction_terms(const Partition& nu, int l, int k) {
  static Memo<std::tuple<Partition, int, int>, WreathRep> memo;
  return memo.get({nu, l, k}, [&] { return wreath_restrict(RepSn::irreducible(nu), l, k); });
}

const WreathRep& twisted_power_terms(const Partition& kappa, const Partition& mu) {
  static Memo<std::pair<Partition, Partition>, WreathRep> memo;
  return memo.get({kappa, mu}, [&] {
    const int l = mu.size();
    return wreath_internal(pullback(RepSn::irreducible(kappa), l), power_map(RepSn::irreducible(mu), kappa.size()));
  });
}

const WreathRep& wreath_cross_terms(const MultiPartition& phi1, const MultiPartition& phi2) {
  static Memo<std::pair<MultiPartition, MultiPartition>, WreathRep, MultiPartitionPairOrder> memo;
  return memo.get({phi1, phi2},
                  [&] { return wreath_cross(WreathRep::irreducible(phi1), WreathRep::irreducible(phi2)); });
}

}  // namespace kring
