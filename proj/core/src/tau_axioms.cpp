#include "kring/tau_axioms.hpp"

#include <algorithm>

#include "kring/tau.hpp"

namespace kring {

namespace {

std::vector<Partition> schur_labels(int max_degree) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

std::string name(const Partition& p) { return "s" + p.to_string(); }

template <class Series>
void compare(AxiomReport& report, const std::string& axiom, const std::string& witness, const Series& lhs,
             const Series& rhs, std::string (*render)(const Series&)) {
  if (lhs == rhs)
    report.record_pass(axiom);
  else
    report.record_failure({axiom, "fail", witness, render(lhs), render(rhs)});
}

std::string render_series(const TauSeries<SymFunc>& s) { return format_series(s); }
std::string render_square(const TauSquare<SymFunc>& s) { return format_tau_square(s); }
std::string render_q(const TauQ<SymFunc>& q) { return format_tau_q(q); }
std::string render_symfunc(const SymFunc& f) { return format_symfunc(f); }

}  // namespace

AxiomReport check_tau_axioms(const TauBudget& budget) {
  AxiomReport report("tau");
  const int cap = budget.cap;
  const auto labels = schur_labels(budget.max_degree);

  std::vector<TauSeries<SymFunc>> taus;
  for (const auto& p : labels) taus.push_back(tau(SymFunc::schur(p), cap));

  for (std::size_t i = 0; i < labels.size(); ++i) {
    const SymFunc x = SymFunc::schur(labels[i]);
    const auto& tx = taus[i];
    const std::string w = "x=" + name(labels[i]);

    // Axiom 1: tau(x) = 1 (x) e_0 + x (x) e_1 + higher levels.
    TauSeries<SymFunc> lead(cap, SymFunc::zero()), expected(cap, SymFunc::zero());
    expected.add(Partition{}, SymFunc::one());
    if (cap >= 1) expected.add(Partition{1}, x);
    for (int m = 0; m <= std::min(cap, 1); ++m)
      for (const auto& [mu, a] : tx.component(m)) lead.add(mu, a);
    compare(report, "1 leading terms", w, lead, expected, render_series);

    // Axiom 3: Delta(tau x) = mu(tau x, tau x).
    compare(report, "3 coproduct", w, coproduct_delta(tx), mu(tx, tx), render_square);
  }

  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) {
      const SymFunc x = SymFunc::schur(labels[i]);
      const SymFunc y = SymFunc::schur(labels[j]);
      const std::string w = "x=" + name(labels[i]) + ", y=" + name(labels[j]);
      const auto product = cross(taus[i], taus[j]);

      // Axiom 2 on the genuine sum, where tau is the closed form.
      compare(report, "2 sum", w, tau(x + y, cap), product, render_series);

      // The x-inverse construction: tau(x - y) x tau(y) = tau(x).
      if (i != j) compare(report, "2 virtual", w, cross(tau(x - y, cap), taus[j]), taus[i], render_series);

      // g_n of tau(x) x tau(y) is the lambda sum rule.
      for (int n = 0; n <= cap; ++n) {
        SymFunc rhs;
        for (int k = 0; k <= n; ++k)
          rhs += plethysm(SymFunc::elementary(k), x) * plethysm(SymFunc::elementary(n - k), y);
        const SymFunc lhs = sign_coefficient(product, n);
        compare(report, "2g sign projection", w + ", n=" + std::to_string(n), lhs, rhs, render_symfunc);
      }

      // Axiom 4: tau(xy) = tau(x) . tau(y).
      compare(report, "4 dot", w, tau(x * y, cap), dot(taus[i], taus[j]), render_series);
    }

  // Axiom 5: tau-dot o tau = box o tau, one block at a time.
  int wreath_cap = 0;
  for (const auto& [l, k] : budget.wreath_blocks) wreath_cap = std::max(wreath_cap, l * k);
  for (const auto& p : schur_labels(budget.wreath_max_degree)) {
    const auto tx = tau(SymFunc::schur(p), wreath_cap);
    for (const auto& block : budget.wreath_blocks) {
      const std::string w = "x=" + name(p) + ", (l,k)=(" + std::to_string(block.first) + "," +
                            std::to_string(block.second) + ")";
      compare(report, "5 wreath square", w, tau_dot(tx, {block}), box(tx, {block}), render_q);
    }
  }
  return report;
}

}  // namespace kring
