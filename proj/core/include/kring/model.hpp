#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "kring/sym_format.hpp"
#include "kring/symfunc.hpp"
#include "kring/tensor_sym.hpp"

namespace kring {

/// Operations the tau machinery needs from a model ring A: ring arithmetic,
/// plethysm by symmetric functions, and a decomposition into genuine basis
/// classes with integer multiplicities.
template <class A>
struct ModelTraits;

template <>
struct ModelTraits<SymFunc> {
  static SymFunc zero_like(const SymFunc&) { return SymFunc::zero(); }
  static SymFunc one_like(const SymFunc&) { return SymFunc::one(); }
  /// Schur basis elements with their integer multiplicities.
  static std::vector<std::pair<SymFunc, Integer>> basis_terms(const SymFunc& x) {
    std::vector<std::pair<SymFunc, Integer>> out;
    for (const auto& [lambda, c] : x.expand_integral(Basis::schur)) out.emplace_back(SymFunc::schur(lambda), c);
    return out;
  }
  static std::string show(const SymFunc& x) { return format_symfunc(x, Basis::schur); }
};

template <>
struct ModelTraits<TensorSym> {
  static TensorSym zero_like(const TensorSym& x) { return TensorSym(x.factors()); }
  static TensorSym one_like(const TensorSym& x) { return TensorSym::one(x.factors()); }
  /// Tensor-Schur basis elements with their integer multiplicities.
  static std::vector<std::pair<TensorSym, Integer>> basis_terms(const TensorSym& x) {
    std::vector<std::pair<TensorSym, Integer>> out;
    for (const auto& [key, c] : x.expand_integral(Basis::schur)) {
      TensorSym::Terms one_term;
      one_term.emplace(key, Rational(1));
      out.emplace_back(TensorSym::from_expansion(x.factors(), Basis::schur, one_term), c);
    }
    return out;
  }
  static std::string show(const TensorSym& x) { return format_tensor(x, Basis::schur); }
};

template <class A>
concept ModelElement = requires(const A& a, const A& b, const SymFunc& f, const Rational& c) {
  { a + b } -> std::convertible_to<A>;
  { a - b } -> std::convertible_to<A>;
  { a * b } -> std::convertible_to<A>;
  { a * c } -> std::convertible_to<A>;
  { plethysm(f, a) } -> std::convertible_to<A>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { ModelTraits<A>::one_like(a) } -> std::convertible_to<A>;
  { ModelTraits<A>::zero_like(a) } -> std::convertible_to<A>;
};

}  // namespace kring
