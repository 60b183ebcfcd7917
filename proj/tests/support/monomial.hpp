#pragma once

#include <map>
#include <vector>

#include "kring/partition.hpp"
#include "kring/symfunc.hpp"

// Finite-variable polynomials, built directly from their combinatorial
// definitions (subsets, multisets, semistandard tableaux). Test oracle for the
// power-sum kernel: nothing here goes through the library's transition data.

namespace kring::testing {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_constant(int nvars, const Rational& c);

/// A multiset of monomials, each standing for one variable of a substituted
/// alphabet.
using Alphabet = std::vector<Exponents>;

/// The variables x_1..x_n themselves.
Alphabet variables(int n);
/// The monomials of a polynomial with nonnegative integer coefficients, each
/// repeated by its coefficient. Throws on any other coefficient.
Alphabet alphabet_of(const Poly& g);

Poly elementary(int k, const Alphabet& a, int nvars);
Poly homogeneous(int k, const Alphabet& a, int nvars);
Poly power_sum(int k, const Alphabet& a, int nvars);
/// Sum over semistandard tableaux of shape lambda with entries in the alphabet.
Poly schur(const Partition& lambda, const Alphabet& a, int nvars);

/// Schur coefficients of a symmetric polynomial in nvars variables, peeled
/// off from the lexicographically leading monomial. Faithful when nvars is at
/// least the degree.
PartitionMap<Rational> schur_decompose(Poly p, int nvars);

/// f restricted to nvars variables (through its power-sum terms).
Poly evaluate(const SymFunc& f, int nvars);

}  // namespace kring::testing
