#pragma once

#include <string>

#include "generators.hpp"

namespace kring::testing {

struct MackeyOutcome {
  bool intersection_order_ok = false;  // |K & H| = |S_n wr S_i| |S_n wr S_j|
  bool identity_ok = false;
  std::size_t double_cosets = 0;
};

/// Res_K Ind_H^G f against the double-coset sum of Ind_{K & sHs^-1}^K f^s, for
/// G = S_l x S_{nl}, H the diagonal S_n wr S_l and K = S_i x S_j x S_{nl}
/// (l = i + j), with f a class function on H with random integer values.
MackeyOutcome mackey_instance(int n, int i, int j, Rng& rng);

}  // namespace kring::testing
