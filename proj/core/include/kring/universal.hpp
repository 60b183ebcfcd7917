#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kring/rational.hpp"

namespace kring {

/// Exponent vectors ordered descending lexicographically.
struct ExponentOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a > b; }
};

/// A polynomial with integer coefficients in named variables.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<std::vector<int>, Integer, ExponentOrder>& terms() const { return terms_; }

  void add_term(std::vector<int> exponents, const Integer& c);

  /// Total degree of each term, weighted: variable i carries weight weights[i].
  int weighted_degree(const std::vector<int>& weights) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  /// Evaluates in any commutative ring given its one, product, sum and
  /// integer scaling.
  template <class T>
  T evaluate(const std::vector<T>& values, const T& zero, const T& one,
             const std::function<T(const T&, const T&)>& add, const std::function<T(const T&, const T&)>& mul,
             const std::function<T(const Integer&, const T&)>& scale) const {
    T acc = zero;
    for (const auto& [exps, c] : terms_) {
      T mono = one;
      for (std::size_t v = 0; v < exps.size(); ++v)
        for (int e = 0; e < exps[v]; ++e) mono = mul(mono, values[v]);
      acc = add(acc, scale(c, mono));
    }
    return acc;
  }

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<std::string> variables_;
  std::map<std::vector<int>, Integer, ExponentOrder> terms_;
};

/// p_k: lambda^k(xy) as a polynomial in L1x..Lkx, L1y..Lky, read off from
/// prod_{i,j} (1 + a_i b_j t) = sum_lambda s_lambda(a) s_{lambda'}(b) t^{|lambda|}
/// after rewriting each Schur function in elementary symmetric functions.
IntPolynomial universal_p(int k);

/// q_{k,l}: lambda^k(lambda^l(x)) as a polynomial in L1x..L(kl)x; the
/// elementary expansion of the plethysm e_k o e_l.
IntPolynomial universal_q(int k, int l);

}  // namespace kring
