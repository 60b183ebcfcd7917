#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an expansion that must be integral (a virtual character in the
/// Schur basis, a multiplicity) has a non-integer coefficient.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would read past a configured degree cap.
class CapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

Integer factorial(int n);

/// Generalized binomial coefficient C(m, n) for any integer m and n >= 0.
Integer binomial(const Integer& m, int n);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace kring
