#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factineq/catalog.hpp"
#include "factineq/claims.hpp"
#include "factineq/report.hpp"

namespace factineq {

using Json = nlohmann::ordered_json;

struct JsonOptions {
  /// Emit runtimeMillis per report. Off by default so output is byte-stable.
  bool includeTiming = false;
  /// Emit every per-n verdict, not just the aggregates.
  bool includeVerdicts = false;
};

/// {"num": "...", "den": "...", "dec": "..."} with exact digit strings and a
/// 12-significant-digit approximation.
Json toJson(const BigRational& value);
Json toJson(const Verdict& verdict);
Json toJson(const DerivationCheck& check);
Json toJson(const RangeReport& report, const JsonOptions& options = {});

struct RunSummary {
  std::int64_t nMin = 1;
  std::int64_t nMax = 1;
  bool strictPrinted = false;
  int exitCode = 0;
};

/// Complete report document: run metadata, status counts and one entry per
/// report in the order given. Ends with a newline.
std::string reportsToJson(const std::vector<RangeReport>& reports, const RunSummary& summary,
                          const JsonOptions& options = {});

/// One row per (subject, n) verdict; errored subjects get a single row.
std::string reportsToCsv(const std::vector<RangeReport>& reports);

/// Fixed-width human summary, one line per subject.
std::string reportsToTable(const std::vector<RangeReport>& reports);

/// Sequences, identities and claims as stored, including derivation inputs.
Json registryToJson(const Catalog& catalog);
std::string registryToTable(const Catalog& catalog);

std::string tightnessToTable(const std::string& claimId, const std::vector<TightnessSample>& samples);
Json tightnessToJson(const std::string& claimId, const std::vector<TightnessSample>& samples);

}  // namespace factineq
