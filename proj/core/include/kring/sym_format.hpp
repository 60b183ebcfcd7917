#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "kring/symfunc.hpp"
#include "kring/tensor_sym.hpp"

namespace kring {

/// Malformed symmetric-function literal or record.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text such as `s[3,1] + 2*s[2,2] - 3/2*p[1,1]`. Terms may use any of
/// the bases m, e, h, p, s; a bare number is a constant.
SymFunc parse_symfunc(std::string_view text);

/// Parses a bracketed partition `[3,1]`, `[]`, or a bare list `3,1`.
Partition parse_partition(std::string_view text);

/// Renders f in basis b, terms in the canonical partition order.
std::string format_symfunc(const SymFunc& f, Basis b = Basis::schur);

/// Renders a tensor element as sums of `c*s[..]#s[..]` terms.
std::string format_tensor(const TensorSym& t, Basis b = Basis::schur);

/// Renders a coefficient: exact integer or `num/den`.
std::string format_coefficient(const Rational& c);

/// Structured record {basis, terms: [{partition, numerator, denominator}]}.
nlohmann::json symfunc_to_json(const SymFunc& f, Basis b = Basis::schur);
SymFunc symfunc_from_json(const nlohmann::json& j);

/// JSON value for a big integer: a number when it fits in 64 bits, else a string.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace kring
