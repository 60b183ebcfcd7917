#include "kring/rep_sn.hpp"

#include <stdexcept>

#include "kring/characters.hpp"
#include "kring/sym_format.hpp"
#include "kring/tensor_sym.hpp"

namespace kring {

RepSn::RepSn(int n, const PartitionMap<Integer>& coeffs) : n_(n) {
  for (const auto& [p, c] : coeffs) add(p, c);
}

RepSn RepSn::irreducible(const Partition& lambda) {
  RepSn r(lambda.size());
  r.add(lambda, 1);
  return r;
}

RepSn RepSn::sign(int n) {
  return irreducible(n == 0 ? Partition{} : Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

RepSn RepSn::regular(int n) {
  RepSn r(n);
  for (const auto& lambda : partitions_of(n)) r.add(lambda, irreducible_dimension(lambda));
  return r;
}

Integer RepSn::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool RepSn::is_genuine() const {
  for (const auto& [p, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Integer RepSn::dimension() const {
  Integer d = 0;
  for (const auto& [p, c] : coeffs_) d += c * irreducible_dimension(p);
  return d;
}

void RepSn::add(const Partition& lambda, const Integer& c) {
  if (lambda.size() != n_)
    throw std::invalid_argument("RepSn: " + lambda.to_string() + " is not a partition of " + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RepSn& RepSn::operator+=(const RepSn& o) {
  if (o.n_ != n_) throw std::invalid_argument("RepSn: adding representations of different groups");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

RepSn& RepSn::operator-=(const RepSn& o) {
  if (o.n_ != n_) throw std::invalid_argument("RepSn: subtracting representations of different groups");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

RepSn& RepSn::operator*=(const Integer& c) {
  if (c == 0) coeffs_.clear();
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

Integer mn_character(const Partition& lambda, const Partition& mu) { return character_value(lambda, mu); }

Integer irreducible_dimension(const Partition& lambda) {
  return character_value(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

SymFunc ch(const RepSn& a) {
  Expansion e{Basis::schur, {}};
  for (const auto& [p, c] : a.coeffs()) e.terms.emplace(p, Rational(c));
  return SymFunc::from_expansion(e);
}

RepSn ch_inverse(const SymFunc& f, int n) {
  if (!f.is_homogeneous(n))
    throw std::invalid_argument("ch_inverse: element is not homogeneous of degree " + std::to_string(n));
  return RepSn(n, f.expand_integral(Basis::schur));
}

RepSn induction_product(const RepSn& a, const RepSn& b) {
  return ch_inverse(multiply(ch(a), ch(b)), a.n() + b.n());
}

std::vector<RepTensor> restriction_coproduct(const RepSn& a) {
  std::vector<RepTensor> out(static_cast<std::size_t>(a.n()) + 1);
  TensorSym delta = coproduct(ch(a));
  for (const auto& [key, c] : delta.expand_integral(Basis::schur))
    out[static_cast<std::size_t>(key[0].size())].emplace(std::make_pair(key[0], key[1]), c);
  return out;
}

RepSn internal_product(const RepSn& a, const RepSn& b) {
  if (a.n() != b.n()) throw std::invalid_argument("internal_product: representations of different groups");
  return ch_inverse(kronecker(ch(a), ch(b)), a.n());
}

RepSn sign_twist(const RepSn& a) { return ch_inverse(omega(ch(a)), a.n()); }

Integer sign_projection_g(const RepSn& a) {
  return a.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(a.n()), 1)));
}

Integer multiplicity_pairing(const RepSn& a, const RepSn& b) {
  if (a.n() != b.n()) return 0;
  Integer acc = 0;
  for (const auto& [p, c] : a.coeffs()) acc += c * b.coefficient(p);
  return acc;
}

std::string format_rep(const RepSn& a) {
  std::string out = "R(S_" + std::to_string(a.n()) + "){ ";
  if (a.is_zero()) return out + "0 }";
  bool first = true;
  for (const auto& [p, c] : a.coeffs()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    out += mag.get_str() + "*" + p.to_string();
  }
  return out + " }";
}

RepSn parse_rep(std::string_view text) {
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " in \"" + std::string(text) + "\"");
  };
  std::string s(text);
  auto open = s.find('{');
  auto close = s.rfind('}');
  if (s.rfind("R(S_", 0) != 0 || open == std::string::npos || close == std::string::npos || close < open)
    fail("expected R(S_n){ ... }");
  int n = std::stoi(s.substr(4, s.find(')') - 4));
  std::string body = s.substr(open + 1, close - open - 1);
  RepSn r(n);
  // Reuse the symmetric-function grammar with a Schur letter on each bracket.
  std::string sym;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[') sym += 's';
    sym += body[i];
  }
  bool blank = sym.find_first_not_of(" \t\n") == std::string::npos;
  if (blank) fail("empty body");
  SymFunc f = parse_symfunc(sym);
  if (!f.is_homogeneous(n)) fail("term of the wrong size");
  return ch_inverse(f, n);
}

nlohmann::json rep_to_json(const RepSn& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : a.coeffs())
    terms.push_back({{"partition", partition_to_json(p)}, {"numerator", integer_to_json(c)}, {"denominator", 1}});
  return {{"n", a.n()}, {"basis", "s"}, {"terms", terms}};
}

RepSn rep_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    RepSn r(n);
    for (const auto& term : j.at("terms")) {
      if (term.contains("denominator") && integer_from_json(term.at("denominator")) != 1)
        throw ParseError("representation multiplicities must be integers");
      r.add(partition_from_json(term.at("partition")), integer_from_json(term.at("numerator")));
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed representation record: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace kring
