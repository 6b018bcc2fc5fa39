#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbr/ring.hpp"

namespace qbr {

enum class Status { Pass, Fail, Skipped, Inconclusive };
[[nodiscard]] const char* to_string(Status s) noexcept;

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json witness = nlohmann::json::object();  // counterexample indices on failure
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct SuiteInfo {
  std::string name;
  std::string checks;
};
/// Suite names accepted by run_suite, in the order `all` runs them.
[[nodiscard]] const std::vector<SuiteInfo>& suite_catalog();

/// Throws MalformedSpec for an unknown suite name.
[[nodiscard]] std::vector<CheckRecord> run_suite(const std::string& suite, const FiniteRing& r,
                                                 const SuiteOptions& opts = {});

/// One of b, qb, qb-nonunital, exchange, semiprime, prime.
[[nodiscard]] CheckRecord run_property(const std::string& property, const FiniteRing& r);

/// One of units, qinv, regular, idempotents, radical, maxreg; the set is in
/// witness["set"] as ascending indices.
[[nodiscard]] CheckRecord run_set(const std::string& set, const FiniteRing& r);

/// Report object: tool, version, command, spec echo, ring summary, checks and
/// a status tally. Timing fields are omitted when `timing` is false.
[[nodiscard]] nlohmann::json make_report(const std::string& command, const nlohmann::json& spec,
                                         const FiniteRing* r, const std::vector<CheckRecord>& checks,
                                         bool timing = true);

/// 1 if any check failed, 2 if every check was skipped, else 0.
[[nodiscard]] int exit_code(const std::vector<CheckRecord>& checks);

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

}  // namespace qbr
