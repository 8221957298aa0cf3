#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factineq/catalog.hpp"
#include "factineq/report.hpp"

namespace factineq {

inline constexpr std::int64_t kDefaultNMax = 200;
inline constexpr std::int64_t kDerivationCheckLimit = 50;

struct SweepOptions {
  std::int64_t nMin = 1;
  std::int64_t nMax = kDefaultNMax;
  /// Worker threads; 0 means one per hardware thread.
  unsigned workers = 1;
  /// Upper n for derivation-chain checks attached to claim reports.
  std::int64_t derivationLimit = kDerivationCheckLimit;
};

/// A sweep subject: an identity, the telescope check of an identity with a
/// witness ("<id>/telescope"), or a claim.
struct Subject {
  std::string id;
  SubjectKind kind;
  /// Identity or claim id this subject refers to.
  std::string target;
};

/// Every subject of the catalog sorted by id.
std::vector<Subject> listSubjects(const Catalog& catalog);

/// Resolves a subject id. Throws UnknownSubjectError.
Subject findSubject(const Catalog& catalog, std::string_view id);

/// Sweeps one subject. Evaluation errors become an errored report.
RangeReport runSubject(const Catalog& catalog, const Subject& subject, const SweepOptions& options);

/// Sweeps `subjects` across options.workers threads; output is in the order
/// given and does not depend on the worker count.
std::vector<RangeReport> runSubjects(const Catalog& catalog, const std::vector<Subject>& subjects,
                                     const SweepOptions& options);

/// One report per identity, telescope witness and claim, sorted by id.
/// Throws UsageError when the range is invalid.
std::vector<RangeReport> runAll(const Catalog& catalog, const SweepOptions& options);

/// Smallest n in 1..nMax where the subject fails, scanning upward and
/// stopping at the first failure. Throws UnknownSubjectError.
std::optional<Counterexample> searchCounterexample(const Catalog& catalog, std::string_view subjectId,
                                                   std::int64_t nMax);

/// 0 when nothing failed, 1 when a subject is refuted or errored. Refuted
/// printed variants with a corrected sibling only count when strictPrinted.
int exitCodeFor(const std::vector<RangeReport>& reports, bool strictPrinted);

/// Throws UsageError unless 1 <= nMin <= nMax.
void validateRange(std::int64_t nMin, std::int64_t nMax);

}  // namespace factineq
