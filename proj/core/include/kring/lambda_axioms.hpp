#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kring/model.hpp"
#include "kring/report.hpp"
#include "kring/universal.hpp"

namespace kring {

/// A commutative ring with a lambda-operation family, plus the elements an
/// axiom check should visit.
template <class T>
struct LambdaRingInstance {
  std::string name;
  T zero;
  T one;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> multiply;
  std::function<T(const Integer&, const T&)> scale;
  std::function<T(const T&, int)> lambda;
  std::function<std::string(const T&)> show;
  /// Elements for the single-variable axioms (i) and (iv).
  std::vector<T> samples;
  /// Pairs for the two-variable axioms (ii) and (iii).
  std::vector<std::pair<T, T>> pairs;
};

struct LambdaBudget {
  int max_k = 3;  // exponent bound for (ii), (iii) and the outer exponent of (iv)
  int max_l = 3;  // inner exponent bound for (iv)
};

/// Evaluates axioms (i)-(iv) on every sample and pair within the budget:
/// (i) lambda^0 = 1 and lambda^1 = id; (ii) lambda^k(x+y) = sum_i
/// lambda^i(x) lambda^{k-i}(y); (iii) lambda^k(xy) = p_k; (iv)
/// lambda^k(lambda^l(x)) = q_{k,l}. Violations are report entries.
template <class T>
AxiomReport check_lambda_axioms(const LambdaRingInstance<T>& inst, const LambdaBudget& budget) {
  AxiomReport report("lambda");
  auto compare = [&](const std::string& axiom, const std::string& witness, const T& lhs, const T& rhs) {
    const std::string tagged = "[" + inst.name + "] " + axiom;
    if (lhs == rhs)
      report.record_pass(tagged);
    else
      report.record_failure({tagged, "fail", witness, inst.show(lhs), inst.show(rhs)});
  };
  // lambda^1..lambda^n of x, with lambda^0 at index 0.
  auto powers = [&](const T& x, int n) {
    std::vector<T> out{inst.one};
    for (int i = 1; i <= n; ++i) out.push_back(inst.lambda(x, i));
    return out;
  };

  for (const T& x : inst.samples) {
    const std::string w = "x=" + inst.show(x);
    compare("(i) lambda^0=1", w, inst.lambda(x, 0), inst.one);
    compare("(i) lambda^1=id", w, inst.lambda(x, 1), x);
  }

  for (const auto& [x, y] : inst.pairs) {
    const std::string w = "x=" + inst.show(x) + ", y=" + inst.show(y);
    const auto lx = powers(x, budget.max_k);
    const auto ly = powers(y, budget.max_k);
    const T sum = inst.add(x, y);
    for (int k = 0; k <= budget.max_k; ++k) {
      T rhs = inst.zero;
      for (int i = 0; i <= k; ++i) rhs = inst.add(rhs, inst.multiply(lx[i], ly[k - i]));
      compare("(ii) sum", w + ", k=" + std::to_string(k), inst.lambda(sum, k), rhs);
    }
    const T product = inst.multiply(x, y);
    for (int k = 1; k <= budget.max_k; ++k) {
      std::vector<T> values(lx.begin() + 1, lx.begin() + k + 1);
      values.insert(values.end(), ly.begin() + 1, ly.begin() + k + 1);
      const T rhs = universal_p(k).evaluate<T>(values, inst.zero, inst.one, inst.add, inst.multiply, inst.scale);
      compare("(iii) product", w + ", k=" + std::to_string(k), inst.lambda(product, k), rhs);
    }
  }

  for (const T& x : inst.samples) {
    const std::string w = "x=" + inst.show(x);
    const auto lx = powers(x, budget.max_k * budget.max_l);
    for (int l = 1; l <= budget.max_l; ++l)
      for (int k = 1; k <= budget.max_k; ++k) {
        std::vector<T> values(lx.begin() + 1, lx.begin() + k * l + 1);
        const T rhs = universal_q(k, l).evaluate<T>(values, inst.zero, inst.one, inst.add, inst.multiply, inst.scale);
        compare("(iv) composition", w + ", k=" + std::to_string(k) + ", l=" + std::to_string(l),
                inst.lambda(lx[l], k), rhs);
      }
  }
  return report;
}

/// The integers with lambda^n(m) = C(m, n), sampled on [-max_abs, max_abs].
LambdaRingInstance<Integer> integer_instance(int max_abs);

/// A model ring with lambda^n = e_n o -, sampled on the given elements; pairs
/// are the unordered pairs accepted by `keep_pair`.
template <ModelElement A>
LambdaRingInstance<A> plethystic_instance(std::string name, const A& like, std::vector<A> samples,
                                          const std::function<bool(const A&, const A&)>& keep_pair) {
  LambdaRingInstance<A> inst;
  inst.name = std::move(name);
  inst.zero = ModelTraits<A>::zero_like(like);
  inst.one = ModelTraits<A>::one_like(like);
  inst.add = [](const A& a, const A& b) { return a + b; };
  inst.multiply = [](const A& a, const A& b) { return a * b; };
  inst.scale = [](const Integer& c, const A& a) { return a * Rational(c); };
  inst.lambda = [](const A& a, int n) { return plethysm(SymFunc::elementary(n), a); };
  inst.show = [](const A& a) { return ModelTraits<A>::show(a); };
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i; j < samples.size(); ++j)
      if (keep_pair(samples[i], samples[j])) inst.pairs.emplace_back(samples[i], samples[j]);
  inst.samples = std::move(samples);
  return inst;
}

}  // namespace kring
