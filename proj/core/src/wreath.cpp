#include "kring/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "kring/characters.hpp"
#include "kring/sym_format.hpp"

namespace kring {

// ---------------------------------------------------------------------------
// MultiPartition

MultiPartition::MultiPartition(int l, int k, const PartitionMap<Partition>& assignment) : l_(l), k_(k) {
  int total = 0;
  for (const auto& [key, value] : assignment) {
    if (key.size() != l)
      throw std::invalid_argument("multipartition key " + key.to_string() + " is not a partition of " +
                                  std::to_string(l));
    if (value.empty()) continue;
    total += value.size();
    assignment_.emplace(key, value);
  }
  if (total != k)
    throw std::invalid_argument("multipartition has total size " + std::to_string(total) + ", expected " +
                                std::to_string(k));
}

MultiPartition MultiPartition::trivial(int l, int k) {
  PartitionMap<Partition> a;
  if (k > 0) a.emplace(l == 0 ? Partition{} : Partition{l}, Partition{k});
  return MultiPartition(l, k, a);
}

Partition MultiPartition::at(const Partition& key) const {
  auto it = assignment_.find(key);
  return it == assignment_.end() ? Partition{} : it->second;
}

std::string MultiPartition::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [key, value] : assignment_) {
    if (!first) s += ',';
    first = false;
    s += key.to_string() + "->" + value.to_string();
  }
  return s + "}";
}

bool MultiPartitionOrder::operator()(const MultiPartition& a, const MultiPartition& b) const {
  if (a.l() != b.l()) return a.l() < b.l();
  if (a.k() != b.k()) return a.k() < b.k();
  for (const auto& key : partitions_of(a.l())) {
    Partition pa = a.at(key), pb = b.at(key);
    if (pa == pb) continue;
    if (pa.size() != pb.size()) return pa.size() > pb.size();
    return pa > pb;
  }
  return false;
}

std::vector<MultiPartition> multipartitions(int l, int k) {
  const auto keys = partitions_of(l);
  std::vector<MultiPartition> out;
  PartitionMap<Partition> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
    if (idx == keys.size()) {
      if (remaining == 0) out.emplace_back(l, k, current);
      return;
    }
    for (int size = remaining; size >= 0; --size) {
      if (idx + 1 == keys.size() && size != remaining) continue;
      for (const auto& p : partitions_of(size)) {
        if (!p.empty()) current[keys[idx]] = p;
        rec(idx + 1, remaining - size);
        current.erase(keys[idx]);
      }
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end(), MultiPartitionOrder{});
  return out;
}

Integer wreath_order(int l, int k) {
  Integer lf = factorial(l), pw;
  mpz_pow_ui(pw.get_mpz_t(), lf.get_mpz_t(), static_cast<unsigned long>(k));
  return pw * factorial(k);
}

Integer wreath_centralizer(const WreathClass& rho) {
  Integer z = 1;
  for (const auto& [c, lengths] : rho.assignment()) {
    z *= lengths.z();
    Integer pw;
    Integer zc = c.z();
    mpz_pow_ui(pw.get_mpz_t(), zc.get_mpz_t(), static_cast<unsigned long>(lengths.length()));
    z *= pw;
  }
  return z;
}

Partition wreath_class_cycle_type(const WreathClass& rho) {
  std::vector<int> parts;
  for (const auto& [c, lengths] : rho.assignment())
    for (int r : lengths.parts())
      for (int ci : c.parts()) parts.push_back(r * ci);
  return Partition::from_unsorted(std::move(parts));
}

// ---------------------------------------------------------------------------
// Class functions

Rational WreathClassFunction::at(const WreathClass& rho) const {
  auto it = values.find(rho);
  return it == values.end() ? Rational(0) : it->second;
}

WreathClassFunction& WreathClassFunction::operator*=(const WreathClassFunction& o) {
  if (o.l != l || o.k != k) throw std::invalid_argument("class functions on different wreath products");
  for (auto it = values.begin(); it != values.end();) {
    it->second *= o.at(it->first);
    if (it->second == 0) it = values.erase(it);
    else ++it;
  }
  return *this;
}

Rational wreath_inner(const WreathClassFunction& f, const WreathClassFunction& h) {
  Rational acc = 0;
  for (const auto& [rho, v] : f.values) {
    Rational w = h.at(rho);
    if (w != 0) acc += v * w / Rational(wreath_centralizer(rho));
  }
  return acc;
}

namespace {

// A class label flattened to groups (cycle-product type, cycle length, count).
struct CycleGroup {
  Partition type;
  int length;
  int count;
};

std::vector<CycleGroup> cycle_groups(const WreathClass& rho) {
  std::vector<CycleGroup> out;
  for (const auto& [c, lengths] : rho.assignment()) {
    auto mult = lengths.multiplicities();
    for (int r = static_cast<int>(mult.size()) - 1; r >= 1; --r)
      if (mult[static_cast<std::size_t>(r)] > 0) out.push_back({c, r, mult[static_cast<std::size_t>(r)]});
  }
  return out;
}

WreathClass class_from_groups(int l, int k, const std::vector<std::pair<const CycleGroup*, int>>& picks) {
  std::map<Partition, std::vector<int>> lengths;
  for (const auto& [g, count] : picks)
    for (int t = 0; t < count; ++t) lengths[g->type].push_back(g->length);
  PartitionMap<Partition> a;
  for (auto& [c, ls] : lengths) a.emplace(c, Partition::from_unsorted(std::move(ls)));
  return WreathClass(l, k, a);
}

}  // namespace

WreathClassFunction induce_from_blocks(const std::vector<WreathClassFunction>& factors) {
  if (factors.empty()) throw std::invalid_argument("induce_from_blocks: no factors");
  const int l = factors.front().l;
  int k = 0;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (f.l != l) throw std::invalid_argument("induce_from_blocks: mixed base groups");
    sizes.push_back(f.k);
    k += f.k;
  }
  const std::size_t r = factors.size();
  WreathClassFunction out{l, k, {}};
  for (const auto& rho : multipartitions(l, k)) {
    const auto groups = cycle_groups(rho);
    const Integer z_rho = wreath_centralizer(rho);
    Rational total = 0;
    // counts[g][i]: how many cycles of group g go to block factor i.
    std::vector<std::vector<int>> counts(groups.size(), std::vector<int>(r, 0));
    std::vector<int> room = sizes;
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t g, std::size_t i, int left) {
      if (g == groups.size()) {
        for (int rm : room)
          if (rm != 0) return;
        Rational term = Rational(z_rho);
        for (std::size_t f = 0; f < r && term != 0; ++f) {
          std::vector<std::pair<const CycleGroup*, int>> picks;
          for (std::size_t h = 0; h < groups.size(); ++h)
            if (counts[h][f] > 0) picks.emplace_back(&groups[h], counts[h][f]);
          WreathClass part = class_from_groups(l, sizes[f], picks);
          Rational v = factors[f].at(part);
          term *= v / Rational(wreath_centralizer(part));
        }
        total += term;
        return;
      }
      if (i + 1 == r) {
        const int need = left * groups[g].length;
        if (need > room[i]) return;
        counts[g][i] = left;
        room[i] -= need;
        rec(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].count : 0);
        room[i] += need;
        counts[g][i] = 0;
        return;
      }
      for (int c = 0; c <= left; ++c) {
        const int need = c * groups[g].length;
        if (need > room[i]) break;
        counts[g][i] = c;
        room[i] -= need;
        rec(g, i + 1, left - c);
        room[i] += need;
        counts[g][i] = 0;
      }
    };
    rec(0, 0, groups.empty() ? 0 : groups[0].count);
    if (total != 0) out.values.emplace(rho, total);
  }
  return out;
}

WreathClassFunction power_character(const RepSn& v, int m) {
  const int l = v.n();
  WreathClassFunction out{l, m, {}};
  std::map<Partition, Integer> chi_v;
  for (const auto& c : partitions_of(l)) {
    Integer acc = 0;
    for (const auto& [lambda, mult] : v.coeffs()) acc += mult * character_value(lambda, c);
    chi_v.emplace(c, acc);
  }
  for (const auto& rho : multipartitions(l, m)) {
    Integer value = 1;
    for (const auto& [c, lengths] : rho.assignment()) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), chi_v.at(c).get_mpz_t(), static_cast<unsigned long>(lengths.length()));
      value *= pw;
    }
    if (value != 0) out.values.emplace(rho, Rational(value));
  }
  return out;
}

WreathClassFunction pullback_character(const RepSn& w, int l) {
  const int k = w.n();
  WreathClassFunction out{l, k, {}};
  for (const auto& rho : multipartitions(l, k)) {
    std::vector<int> top;
    for (const auto& [c, lengths] : rho.assignment())
      top.insert(top.end(), lengths.parts().begin(), lengths.parts().end());
    Partition sigma = Partition::from_unsorted(std::move(top));
    Integer value = 0;
    for (const auto& [lambda, mult] : w.coeffs()) value += mult * character_value(lambda, sigma);
    if (value != 0) out.values.emplace(rho, Rational(value));
  }
  return out;
}

WreathClassFunction wreath_irreducible_character(const MultiPartition& phi) {
  const int l = phi.l();
  if (phi.k() == 0) {
    WreathClassFunction unit{l, 0, {}};
    unit.values.emplace(MultiPartition(l, 0, {}), Rational(1));
    return unit;
  }
  std::vector<WreathClassFunction> blocks;
  for (const auto& [mu, kappa] : phi.assignment()) {
    WreathClassFunction f = power_character(RepSn::irreducible(mu), kappa.size());
    f *= pullback_character(RepSn::irreducible(kappa), l);
    blocks.push_back(std::move(f));
  }
  if (blocks.size() == 1) return blocks.front();
  return induce_from_blocks(blocks);
}

// ---------------------------------------------------------------------------
// Tables

std::size_t WreathCharacterTable::irreducible_index(const MultiPartition& phi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i] == phi) return i;
  throw std::out_of_range("not an irreducible label: " + phi.to_string());
}

std::size_t WreathCharacterTable::class_index(const WreathClass& rho) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == rho) return i;
  throw std::out_of_range("not a class label: " + rho.to_string());
}

const WreathCharacterTable& wreath_character_table(int l, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<WreathCharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({l, k});
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<WreathCharacterTable>();
  table->l = l;
  table->k = k;
  table->irreducibles = multipartitions(l, k);
  table->classes = table->irreducibles;  // same label set
  for (const auto& rho : table->classes) table->centralizers.push_back(wreath_centralizer(rho));
  for (const auto& phi : table->irreducibles) {
    WreathClassFunction chi = wreath_irreducible_character(phi);
    std::vector<Integer> row;
    for (const auto& rho : table->classes) {
      Rational v = chi.at(rho);
      if (!is_integral(v)) throw IntegralityError("non-integral wreath character value at " + rho.to_string());
      row.push_back(v.get_num());
    }
    table->values.push_back(std::move(row));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(l, k), std::move(table));
  return *it->second;
}

WreathClassFunction wreath_character(const WreathRep& w) {
  const auto& table = wreath_character_table(w.l(), w.k());
  WreathClassFunction out{w.l(), w.k(), {}};
  for (std::size_t j = 0; j < table.classes.size(); ++j) {
    Integer v = 0;
    for (const auto& [phi, c] : w.coeffs()) v += c * table.values[table.irreducible_index(phi)][j];
    if (v != 0) out.values.emplace(table.classes[j], Rational(v));
  }
  return out;
}

WreathRep decompose(const WreathClassFunction& f) {
  const auto& table = wreath_character_table(f.l, f.k);
  WreathRep out(f.l, f.k);
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    Rational m = 0;
    for (std::size_t j = 0; j < table.classes.size(); ++j) {
      if (table.values[i][j] == 0) continue;
      Rational v = f.at(table.classes[j]);
      if (v != 0) m += v * Rational(table.values[i][j]) / Rational(table.centralizers[j]);
    }
    if (!is_integral(m))
      throw IntegralityError("non-integral multiplicity " + to_string(m) + " of " +
                             table.irreducibles[i].to_string());
    out.add(table.irreducibles[i], m.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// WreathRep

WreathRep WreathRep::irreducible(const MultiPartition& phi) {
  WreathRep w(phi.l(), phi.k());
  w.add(phi, 1);
  return w;
}

Integer WreathRep::coefficient(const MultiPartition& phi) const {
  auto it = coeffs_.find(phi);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

namespace {

WreathClass identity_class(int l, int k) {
  PartitionMap<Partition> a;
  if (k > 0)
    a.emplace(Partition(std::vector<int>(static_cast<std::size_t>(l), 1)),
              Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  return WreathClass(l, k, a);
}

}  // namespace

Integer WreathRep::dimension() const {
  if (is_zero()) return 0;
  const auto& table = wreath_character_table(l_, k_);
  const std::size_t id = table.class_index(identity_class(l_, k_));
  Integer d = 0;
  for (const auto& [phi, c] : coeffs_) d += c * table.values[table.irreducible_index(phi)][id];
  return d;
}

void WreathRep::add(const MultiPartition& phi, const Integer& c) {
  if (phi.l() != l_ || phi.k() != k_)
    throw std::invalid_argument("WreathRep: label " + phi.to_string() + " has the wrong (l, k)");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(phi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

WreathRep& WreathRep::operator+=(const WreathRep& o) {
  for (const auto& [phi, c] : o.coeffs_) add(phi, c);
  return *this;
}

WreathRep& WreathRep::operator-=(const WreathRep& o) {
  for (const auto& [phi, c] : o.coeffs_) add(phi, -c);
  return *this;
}

// ---------------------------------------------------------------------------
// Maps

WreathRep power_map(const RepSn& v, int m) {
  if (!v.is_genuine()) throw std::invalid_argument("power_map: the power map is defined on genuine representations");
  if (m < 0) throw std::invalid_argument("power_map: negative exponent");
  return decompose(power_character(v, m));
}

RepSn wreath_induce(const WreathRep& w) {
  const int n = w.l() * w.k();
  SymFunc total;
  for (const auto& [phi, c] : w.coeffs()) {
    SymFunc term = SymFunc::one();
    for (const auto& [mu, kappa] : phi.assignment())
      term = multiply(term, plethysm(SymFunc::schur(kappa), SymFunc::schur(mu)));
    total += term * Rational(c);
  }
  return ch_inverse(total, n);
}

PartitionMap<Rational> induce_class_function(const WreathClassFunction& f) {
  PartitionMap<Rational> out;
  for (const auto& [rho, v] : f.values) {
    Partition nu = wreath_class_cycle_type(rho);
    out[nu] += v * Rational(nu.z()) / Rational(wreath_centralizer(rho));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

WreathRep wreath_restrict(const RepSn& a, int l, int k) {
  if (a.n() != l * k) throw std::invalid_argument("wreath_restrict: representation is not of S_{lk}");
  WreathRep out(l, k);
  for (const auto& phi : multipartitions(l, k))
    out.add(phi, multiplicity_pairing(a, wreath_induce(WreathRep::irreducible(phi))));
  return out;
}

WreathRep pullback(const RepSn& w, int l) {
  WreathRep out(l, w.n());
  for (const auto& [mu, c] : w.coeffs()) {
    PartitionMap<Partition> a;
    if (!mu.empty()) a.emplace(l == 0 ? Partition{} : Partition{l}, mu);
    out.add(MultiPartition(l, w.n(), a), c);
  }
  return out;
}

WreathRep wreath_internal(const WreathRep& a, const WreathRep& b) {
  if (a.l() != b.l() || a.k() != b.k()) throw std::invalid_argument("wreath_internal: different wreath products");
  WreathClassFunction f = wreath_character(a);
  f *= wreath_character(b);
  return decompose(f);
}

WreathRep wreath_cross(const WreathRep& a, const WreathRep& b) {
  if (a.l() != b.l()) throw std::invalid_argument("wreath_cross: different base groups");
  const int l = a.l();
  const int k = a.k() + b.k();
  WreathRep out(l, k);
  for (const auto& [pa, ca] : a.coeffs()) {
    for (const auto& [pb, cb] : b.coeffs()) {
      // Per key, expand s_{pa(mu)} s_{pb(mu)}; then take all combinations.
      std::vector<std::pair<Partition, IntegralTerms>> per_key;
      for (const auto& key : partitions_of(l)) {
        Partition x = pa.at(key), y = pb.at(key);
        if (x.empty() && y.empty()) continue;
        per_key.emplace_back(key, lr_product(x, y));
      }
      PartitionMap<Partition> current;
      std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t i, const Integer& coeff) {
        if (i == per_key.size()) {
          out.add(MultiPartition(l, k, current), coeff * ca * cb);
          return;
        }
        for (const auto& [nu, c] : per_key[i].second) {
          current[per_key[i].first] = nu;
          rec(i + 1, coeff * c);
        }
        current.erase(per_key[i].first);
      };
      rec(0, 1);
    }
  }
  return out;
}

std::vector<std::pair<SymFunc, Partition>> delta_map(const RepSn& v, int m) {
  if (!v.is_genuine()) throw std::invalid_argument("delta_map: the power map is defined on genuine representations");
  const SymFunc chv = ch(v);
  std::vector<std::pair<SymFunc, Partition>> out;
  for (const auto& mu : partitions_of(m)) out.emplace_back(plethysm(SymFunc::schur(mu), chv), mu);
  return out;
}

// ---------------------------------------------------------------------------
// Text and records

MultiPartition parse_multipartition(std::string_view text, int l, int k) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("multipartition must be written {[..]->[..],...}: \"" + std::string(text) + "\"");
  std::string body = s.substr(1, s.size() - 2);
  PartitionMap<Partition> a;
  int inferred_l = -1, total = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto arrow = body.find("->", pos);
    if (arrow == std::string::npos) throw ParseError("missing '->' in multipartition \"" + std::string(text) + "\"");
    auto close = body.find(']', arrow + 2);
    if (close == std::string::npos) throw ParseError("unterminated partition in \"" + std::string(text) + "\"");
    Partition key = parse_partition(body.substr(pos, arrow - pos));
    Partition value = parse_partition(body.substr(arrow + 2, close + 1 - (arrow + 2)));
    if (a.count(key)) throw ParseError("repeated key " + key.to_string());
    inferred_l = key.size();
    total += value.size();
    a.emplace(key, value);
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') throw ParseError("expected ',' in multipartition \"" + std::string(text) + "\"");
      ++pos;
    }
  }
  if (l < 0) l = inferred_l < 0 ? 0 : inferred_l;
  if (k < 0) k = total;
  try {
    return MultiPartition(l, k, a);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_wreath_rep(const WreathRep& w) {
  std::string out = "R(S_" + std::to_string(w.l()) + " wr S_" + std::to_string(w.k()) + "){ ";
  if (w.is_zero()) return out + "0 }";
  bool first = true;
  for (const auto& [phi, c] : w.coeffs()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    out += mag.get_str() + "*" + phi.to_string();
  }
  return out + " }";
}

nlohmann::json multipartition_to_json(const MultiPartition& phi) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : phi.assignment())
    entries.push_back({{"key", partition_to_json(key)}, {"value", partition_to_json(value)}});
  return entries;
}

nlohmann::json wreath_rep_to_json(const WreathRep& w) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [phi, c] : w.coeffs())
    terms.push_back({{"multipartition", multipartition_to_json(phi)}, {"coefficient", integer_to_json(c)}});
  return {{"l", w.l()}, {"k", w.k()}, {"terms", terms}};
}

WreathRep wreath_rep_from_json(const nlohmann::json& j) {
  try {
    const int l = j.at("l").get<int>(), k = j.at("k").get<int>();
    WreathRep w(l, k);
    for (const auto& term : j.at("terms")) {
      PartitionMap<Partition> a;
      for (const auto& entry : term.at("multipartition"))
        a.emplace(partition_from_json(entry.at("key")), partition_from_json(entry.at("value")));
      w.add(MultiPartition(l, k, a), integer_from_json(term.at("coefficient")));
    }
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed wreath record: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace kring
