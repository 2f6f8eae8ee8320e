#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagwalk/diagonal.hpp"

namespace diagwalk {

struct RosterEntry {
  std::uint32_t p = 3;
  std::uint32_t a = 1;
  std::uint32_t b = 2;

  std::string to_string() const;
};

// q = 9, 25, 49, 64, 81.
std::vector<RosterEntry> default_roster();

// "3,1,2" or "3,1,2;5,1,2".
std::vector<RosterEntry> parse_roster(const std::string& literal);

struct VerifyOptions {
  std::vector<RosterEntry> roster = default_roster();
  unsigned max_r = 4;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  unsigned neps_instances = 200;
  std::uint64_t seed = 20240501;
  // Negative control: perturbs one formula value so the suite must fail.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string suite;
  std::string scope;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;
  std::string counterexample;
};

struct VerifyReport {
  std::vector<SuiteResult> results;

  bool passed() const;
  const SuiteResult* first_failure() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace diagwalk
