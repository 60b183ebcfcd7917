#include "kring/sym_format.hpp"

#include <cctype>
#include <limits>

namespace kring {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Partition parse_parts(Cursor& cur) {
  cur.expect('[');
  std::vector<int> parts;
  if (!cur.accept(']')) {
    do {
      std::string d = cur.digits();
      if (d.size() > 6) cur.fail("partition part too large");
      parts.push_back(std::stoi(d));
    } while (cur.accept(','));
    cur.expect(']');
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

Rational parse_number(Cursor& cur) {
  Integer num(cur.digits());
  Integer den = 1;
  if (cur.accept('/')) {
    den = Integer(cur.digits());
    if (den == 0) cur.fail("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Cursor cur(text);
  Partition p;
  if (cur.peek() == '[') {
    p = parse_parts(cur);
  } else {
    std::vector<int> parts;
    if (!cur.done()) {
      do {
        parts.push_back(std::stoi(cur.digits()));
      } while (cur.accept(','));
    }
    try {
      p = Partition(parts);
    } catch (const std::invalid_argument& e) {
      cur.fail(e.what());
    }
  }
  if (!cur.done()) cur.fail("trailing characters");
  return p;
}

SymFunc parse_symfunc(std::string_view text) {
  Cursor cur(text);
  SymFunc out;
  bool first = true;
  if (cur.done()) cur.fail("empty expression");
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = parse_number(cur);
      have_number = true;
      if (!cur.accept('*')) {
        out += SymFunc::constant(sign * coeff);
        continue;
      }
    }
    char letter = cur.peek();
    auto basis = basis_from_letter(letter);
    if (!basis) cur.fail(have_number ? "expected a basis letter after '*'" : "expected a term");
    cur.take();
    Partition lambda = parse_parts(cur);
    out += SymFunc::basis_element(*basis, lambda) * (sign * coeff);
  }
  return out;
}

std::string format_coefficient(const Rational& c) { return to_string(c); }

namespace {

template <class Map, class KeyFmt>
std::string format_terms(const Map& terms, KeyFmt key_fmt) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += key_fmt(key);
  }
  return out;
}

}  // namespace

std::string format_symfunc(const SymFunc& f, Basis b) {
  const char letter = basis_letter(b);
  return format_terms(f.expand(b).terms, [letter](const Partition& p) { return letter + p.to_string(); });
}

std::string format_tensor(const TensorSym& t, Basis b) {
  const char letter = basis_letter(b);
  return format_terms(t.expand(b), [letter](const std::vector<Partition>& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += '#';
      s += letter + key[i].to_string();
    }
    return s;
  });
}

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer");
}

nlohmann::json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("partition must be an array");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json symfunc_to_json(const SymFunc& f, Basis b) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : f.expand(b).terms) {
    terms.push_back({{"partition", partition_to_json(p)},
                     {"numerator", integer_to_json(c.get_num())},
                     {"denominator", integer_to_json(c.get_den())}});
  }
  return {{"basis", std::string(1, basis_letter(b))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  try {
    const auto letter = j.at("basis").get<std::string>();
    auto basis = letter.size() == 1 ? basis_from_letter(letter[0]) : std::nullopt;
    if (!basis) throw ParseError("unknown basis '" + letter + "'");
    Expansion e{*basis, {}};
    for (const auto& term : j.at("terms")) {
      Integer num = integer_from_json(term.at("numerator"));
      Integer den = term.contains("denominator") ? integer_from_json(term.at("denominator")) : Integer(1);
      if (den == 0) throw ParseError("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      Partition p = partition_from_json(term.at("partition"));
      e.terms[p] += q;
    }
    std::erase_if(e.terms, [](const auto& kv) { return kv.second == 0; });
    return SymFunc::from_expansion(e);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed symmetric-function record: ") + ex.what());
  }
}

}  // namespace kring
