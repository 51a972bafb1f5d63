#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lent {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  double tol = 1e-9;        // comparison tolerance
  double tail_tol = 1e-9;   // truncation budget for geometric sums
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& verify_suite_names();  // core..sfrl plus "all"

// Runs one named invariant suite ("core", "channels", "envelopes", "codes",
// "sfrl", or "all"). Equality-style identities are checked at
// min(cfg.tol, 1e-12), inequalities at cfg.tol. Throws std::invalid_argument
// for an unknown suite name.
SuiteReport run_verify_suite(const std::string& name, const VerifyConfig& cfg);

std::string suite_report_json(const SuiteReport& r);

}  // namespace lent
