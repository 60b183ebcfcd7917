#include "kring/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace kring {

void AxiomReport::record_pass(const std::string& axiom) { ++tallies_[axiom].checked; }

void AxiomReport::record_failure(AxiomCheck check) {
  auto& t = tallies_[check.axiom];
  ++t.checked;
  ++t.failed;
  check.status = "fail";
  failures_.push_back(std::move(check));
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& [axiom, t] : other.tallies_) {
    tallies_[axiom].checked += t.checked;
    tallies_[axiom].failed += t.failed;
  }
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

std::size_t AxiomReport::checked() const {
  std::size_t n = 0;
  for (const auto& [_, t] : tallies_) n += t.checked;
  return n;
}

std::size_t AxiomReport::failed() const {
  std::size_t n = 0;
  for (const auto& [_, t] : tallies_) n += t.failed;
  return n;
}

std::vector<AxiomCheck> AxiomReport::failures() const {
  auto out = failures_;
  std::sort(out.begin(), out.end(), [](const AxiomCheck& a, const AxiomCheck& b) {
    return std::tie(a.axiom, a.witness, a.lhs, a.rhs) < std::tie(b.axiom, b.witness, b.lhs, b.rhs);
  });
  return out;
}

std::string AxiomReport::to_table() const {
  std::size_t width = 5;
  for (const auto& [axiom, _] : tallies_) width = std::max(width, axiom.size());
  std::ostringstream os;
  if (!suite_.empty()) os << "suite: " << suite_ << "\n";
  os << std::left << std::setw(static_cast<int>(width)) << "axiom" << "  " << std::right << std::setw(8) << "checked"
     << "  " << std::setw(6) << "failed" << "  status\n";
  for (const auto& [axiom, t] : tallies_)
    os << std::left << std::setw(static_cast<int>(width)) << axiom << "  " << std::right << std::setw(8) << t.checked
       << "  " << std::setw(6) << t.failed << "  " << (t.failed == 0 ? "pass" : "FAIL") << "\n";
  for (const auto& f : failures()) {
    os << "\nviolation of " << f.axiom << " at " << f.witness << "\n";
    os << "  lhs: " << f.lhs << "\n";
    os << "  rhs: " << f.rhs << "\n";
  }
  os << "total: " << checked() << " checked, " << failed() << " failed\n";
  return os.str();
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json summary = nlohmann::json::array();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [axiom, t] : tallies_) {
    summary.push_back({{"axiom", axiom}, {"checked", t.checked}, {"failed", t.failed}});
    if (t.failed == 0)
      checks.push_back({{"axiom", axiom}, {"status", "pass"}, {"witness", "all"}, {"lhs", ""}, {"rhs", ""}});
  }
  for (const auto& f : failures())
    checks.push_back({{"axiom", f.axiom}, {"status", f.status}, {"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  std::stable_sort(checks.begin(), checks.end(),
                   [](const nlohmann::json& a, const nlohmann::json& b) { return a["axiom"] < b["axiom"]; });
  return {{"suite", suite_}, {"summary", summary}, {"checks", checks}, {"checked", checked()}, {"failed", failed()}};
}

}  // namespace kring
