#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tto/workspace.hpp"

namespace tto {

struct RunConfig {
  int grid_size = 1024;
  double tol_monomial = 1e-12;
  double tol_blaschke = 1e-8;
  std::uint64_t seed = 1;
  int trials = 100;
};

// One verified operator identity: residual is the largest singular value of
// the difference matrix (or the corresponding L2 defect for function-level
// checks); pass means residual <= tolerance.
struct IdentityReport {
  std::string id;
  nlohmann::json params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

struct VerifyRequest {
  BlaschkeProduct theta = BlaschkeProduct::zpow(5);
  BlaschkeProduct alpha = BlaschkeProduct::zpow(3);
  std::optional<LaurentSymbol> symbol;  // pinned symbol; otherwise seeded draws
  RunConfig config;
};

struct IdentityDef {
  std::string id;
  std::string summary;
  bool parameterized = false;  // consumes theta/alpha from the request
  bool expect_fail = false;    // counterexample: the report must NOT pass
};

const std::vector<IdentityDef>& identity_registry();
const IdentityDef* find_identity(const std::string& id);

IdentityReport verify_identity(const std::string& id, const VerifyRequest& request);

enum class SymbolClassDirection { class1, class2, generic };

IdentityReport verify_corollary_5_3(SymbolClassDirection direction,
                                    const BlaschkeProduct& theta,
                                    const BlaschkeProduct& alpha,
                                    const RunConfig& config);

// Golden matrix displays with seeded numeric coefficients, each built from
// its closed-form entry pattern and from the module pipeline, compared
// entrywise.
std::vector<IdentityReport> fixture_suite(const RunConfig& config);

struct SuiteResult {
  std::vector<IdentityReport> reports;
  bool all_ok = false;  // every report matches its expectation
};

// Everything in the registry at default monomial parameters, one seeded
// Blaschke pair, and the fixture set.
SuiteResult run_suite(const RunConfig& config);

bool report_matches_expectation(const IdentityReport& report);

// Seeded random pair: theta of degree 2..max_degree with zeros inside
// |z| <= max_radius, alpha a strict divisor with at least one zero.
std::pair<BlaschkeProduct, BlaschkeProduct> random_blaschke_pair(
    Rng& rng, int max_degree = 6, double max_radius = 0.8);

}  // namespace tto
