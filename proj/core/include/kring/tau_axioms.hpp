#pragma once

#include <utility>
#include <vector>

#include "kring/report.hpp"

namespace kring {

/// Sizes for the tau-ring axiom suite on the symmetric-function model.
struct TauBudget {
  int max_degree = 3;  // Schur inputs s_lambda with |lambda| <= max_degree, axioms 1-4
  int cap = 4;         // series cap for axioms 1-4
  int wreath_max_degree = 2;
  std::vector<std::pair<int, int>> wreath_blocks{{1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}};
};

/// Checks tau axioms 1-5 on Schur inputs, plus the consistency of g_n on
/// cross products with the sum axiom for lambda ("2g"), and the x-inverse
/// construction on differences ("2 virtual").
AxiomReport check_tau_axioms(const TauBudget& budget);

}  // namespace kring
