#include "kring/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kring {

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(const Integer& m, int n) {
  if (n < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Integer Partition::z() const {
  Integer r = 1;
  auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
    r *= pw;
    r *= factorial(m[i]);
  }
  return r;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

Partition Partition::scaled(int factor) const {
  std::vector<int> out = parts_;
  for (int& p : out) p *= factor;
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, max_part, prefix, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

Integer partition_count(int n) {
  // Euler's pentagonal recurrence.
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sgn = (k % 2 == 1) ? 1 : -1;
      acc += sgn * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sgn * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

std::size_t partition_index(const Partition& p) {
  static std::mutex mu;
  static std::unordered_map<int, std::map<Partition, std::size_t>> cache;
  std::lock_guard lock(mu);
  auto& idx = cache[p.size()];
  if (idx.empty()) {
    auto all = partitions_of(p.size());
    for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i], i);
  }
  return idx.at(p);
}

}  // namespace kring
