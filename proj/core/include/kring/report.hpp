#pragma once

#include <nlohmann/json.hpp>
#include <map>
#include <string>
#include <vector>

namespace kring {

/// One evaluated identity. Failures carry both sides rendered as text.
struct AxiomCheck {
  std::string axiom;
  std::string status;  // "pass" or "fail"
  std::string witness;
  std::string lhs;
  std::string rhs;
};

/// Outcome of an axiom suite: a pass/fail tally per axiom and every failure
/// with its witness. Listings are sorted, so the report does not depend on
/// the order in which checks were recorded.
class AxiomReport {
 public:
  struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
  };

  explicit AxiomReport(std::string suite = "") : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void record_pass(const std::string& axiom);
  void record_failure(AxiomCheck check);
  void merge(const AxiomReport& other);

  std::size_t checked() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  const std::map<std::string, Tally>& tallies() const { return tallies_; }
  std::vector<AxiomCheck> failures() const;

  /// Aligned text: one row per axiom, then one block per failure.
  std::string to_table() const;
  /// {suite, summary: [{axiom, checked, failed}], checks: [{axiom, status, witness, lhs, rhs}]}
  /// where checks lists the failures, or one passing record per axiom.
  nlohmann::json to_json() const;

 private:
  std::string suite_;
  std::map<std::string, Tally> tallies_;
  std::vector<AxiomCheck> failures_;
};

}  // namespace kring
