#include "kring/lambda_axioms.hpp"

namespace kring {

LambdaRingInstance<Integer> integer_instance(int max_abs) {
  LambdaRingInstance<Integer> inst;
  inst.name = "Z";
  inst.zero = 0;
  inst.one = 1;
  inst.add = [](const Integer& a, const Integer& b) -> Integer { return a + b; };
  inst.multiply = [](const Integer& a, const Integer& b) -> Integer { return a * b; };
  inst.scale = [](const Integer& c, const Integer& a) -> Integer { return c * a; };
  inst.lambda = [](const Integer& m, int n) { return binomial(m, n); };
  inst.show = [](const Integer& a) { return a.get_str(); };
  for (int x = -max_abs; x <= max_abs; ++x) inst.samples.emplace_back(x);
  for (int x = -max_abs; x <= max_abs; ++x)
    for (int y = x; y <= max_abs; ++y) inst.pairs.emplace_back(x, y);
  return inst;
}

}  // namespace kring
