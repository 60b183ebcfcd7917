#include "kring/universal.hpp"

#include <stdexcept>

#include "kring/symfunc.hpp"

namespace kring {

void IntPolynomial::add_term(std::vector<int> exponents, const Integer& c) {
  if (exponents.size() != variables_.size()) throw std::invalid_argument("IntPolynomial: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int IntPolynomial::weighted_degree(const std::vector<int>& weights) const {
  int best = -1;
  for (const auto& [exps, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * weights[i];
    best = std::max(best, d);
  }
  return best;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    std::string mono;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables_[v];
      if (exps[v] > 1) mono += '^' + std::to_string(exps[v]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

nlohmann::json IntPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : terms_) {
    nlohmann::json coeff = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
    terms.push_back({{"exponents", exps}, {"coefficient", coeff}});
  }
  return {{"variables", variables_}, {"terms", terms}};
}

namespace {

// Elementary expansion of s_lambda as exponent vectors over sigma_1..sigma_width.
std::vector<std::pair<std::vector<int>, Integer>> schur_in_elementary(const Partition& lambda, int width) {
  std::vector<std::pair<std::vector<int>, Integer>> out;
  for (const auto& [mu, c] : SymFunc::schur(lambda).expand_integral(Basis::elementary)) {
    std::vector<int> exps(static_cast<std::size_t>(width), 0);
    for (int part : mu.parts()) ++exps[static_cast<std::size_t>(part - 1)];
    out.emplace_back(std::move(exps), c);
  }
  return out;
}

}  // namespace

IntPolynomial universal_p(int k) {
  if (k < 1) throw std::invalid_argument("universal_p: k must be positive");
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("L" + std::to_string(i) + "x");
  for (int i = 1; i <= k; ++i) vars.push_back("L" + std::to_string(i) + "y");
  IntPolynomial poly(vars);
  for (const auto& lambda : partitions_of(k)) {
    auto left = schur_in_elementary(lambda, k);
    auto right = schur_in_elementary(lambda.conjugate(), k);
    for (const auto& [ea, ca] : left) {
      for (const auto& [eb, cb] : right) {
        std::vector<int> exps = ea;
        exps.insert(exps.end(), eb.begin(), eb.end());
        poly.add_term(std::move(exps), ca * cb);
      }
    }
  }
  return poly;
}

IntPolynomial universal_q(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("universal_q: k and l must be positive");
  const int width = k * l;
  std::vector<std::string> vars;
  for (int i = 1; i <= width; ++i) vars.push_back("L" + std::to_string(i) + "x");
  IntPolynomial poly(vars);
  SymFunc composite = plethysm(SymFunc::elementary(k), SymFunc::elementary(l));
  for (const auto& [mu, c] : composite.expand_integral(Basis::elementary)) {
    std::vector<int> exps(static_cast<std::size_t>(width), 0);
    for (int part : mu.parts()) ++exps[static_cast<std::size_t>(part - 1)];
    poly.add_term(std::move(exps), c);
  }
  return poly;
}

}  // namespace kring
