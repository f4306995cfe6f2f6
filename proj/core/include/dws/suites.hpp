#pragma once

#include "dws/orbit.hpp"
#include "dws/signs.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dws::suites {

struct SuiteConfig {
  int n = 3;
  int r = 6;
  std::vector<int> lambda{2, 1};
  double x = 0.5;
  double delta = 1.0;
  int trunc = 40;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int window = 2;
  std::vector<int> lattice;            // empty selects Lattice::default_for(n)
  std::vector<std::string> relations;  // empty selects every relation
  int points = 20;
  int max_vars = 8;         // star suite: variables per side
  int max_sign_vars = 7;    // signs-cross: variables per side
  bool extra_delta = true;  // star suite: also run one random non-integer delta

  // Throws std::invalid_argument with a readable message.
  void validate() const;
  orbit::OrbitConfig orbit_config() const;
};

enum class CaseKind { Numeric, Exact, Count, Info };

struct CaseRecord {
  std::string id;
  std::string params;
  CaseKind kind = CaseKind::Numeric;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = true;
  std::map<std::string, std::string> extra;
  // Exact suites: the non-zero difference, word -> (q exponent -> coefficient).
  std::map<std::string, std::map<int, std::int64_t>> exact_terms;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::map<std::string, std::string> summary;
  double wall_seconds = 0.0;

  bool pass() const;
  std::size_t failures() const;
};

const std::vector<std::string>& suite_names();

SuiteReport theta_suite(const SuiteConfig& cfg);
SuiteReport star_suite(const SuiteConfig& cfg);
SuiteReport zeros_suite(const SuiteConfig& cfg);
SuiteReport membership_suite(const SuiteConfig& cfg);
SuiteReport signs_cross_suite(const SuiteConfig& cfg);
SuiteReport qshuffle_suite(const SuiteConfig& cfg);
// Orbit listing audit: admissibility criterion, partner uniqueness, m and degree laws.
SuiteReport orbit_suite(const SuiteConfig& cfg);
// GF(2) sign solve plus the d^2 audit. Infeasibility is recorded, not failed.
SuiteReport signs_suite(const SuiteConfig& cfg);
// Negative controls: every single k perturbation of a CS relation and every
// single edge-sign flip of a solved assignment must be reported. A case
// passes when the fault is detected.
SuiteReport controls_suite(const SuiteConfig& cfg);

// Dispatches by name: theta, star, zeros, membership, signs-cross, qshuffle,
// plus orbit, signs and controls.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace dws::suites
