#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factineq/numeric.hpp"

namespace factineq {

enum class SubjectKind { Identity, Claim, Telescope };

std::string_view toString(SubjectKind kind);

/// One n of a sweep. For identities lhs is the exact partial sum and rhs the
/// closed form; for telescopes n is the index k, lhs the summand and rhs the
/// witness difference c + g(k+1) - g(k).
struct Verdict {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
  bool equality = false;
  /// Claims only: lhs/rhs for <= claims, rhs/lhs for >= claims, so 1 is tight.
  std::optional<BigRational> tightness;
};

struct Counterexample {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
};

struct TightnessPoint {
  std::int64_t n = 0;
  BigRational ratio;
};

/// Result of re-running a claim's derivation chain.
struct DerivationCheck {
  std::string kind;  // "chebyshev" or "reciprocal-chain"
  std::vector<std::pair<std::string, std::string>> inputs;
  std::int64_t checkedUpTo = 0;
  /// The chain's own right-hand side equals the claim's at every checked n.
  bool reproducesRhs = false;
  std::optional<std::int64_t> firstMismatchN;
  /// Set when the chain could not be built (e.g. summand mismatch).
  std::optional<std::string> inputError;
  /// Premises that fail over the checked range (identity ids, "alignment",
  /// "reciprocal-step", base claim ids).
  std::vector<std::string> failedPremises;
  std::vector<std::string> notes;
};

/// Aggregated sweep over nMin..nMax for one subject.
struct RangeReport {
  std::string subjectId;
  SubjectKind subjectKind = SubjectKind::Claim;
  /// "printed", "corrected", "plumbing" or "user".
  std::string variant;
  std::string statement;
  std::int64_t nMin = 1;
  std::int64_t nMax = 1;
  /// Counterexamples are empty. Always false for errored reports.
  bool allHold = true;
  std::vector<Counterexample> counterexamples;
  std::vector<std::int64_t> equalityPoints;
  std::optional<TightnessPoint> minTightness;
  std::optional<std::string> correctedSibling;
  std::optional<DerivationCheck> derivation;
  std::optional<std::string> error;
  std::int64_t runtimeMillis = 0;
  std::vector<Verdict> verdicts;

  /// Folds one verdict into the aggregates.
  void record(Verdict verdict);
  /// Marks the report as errored at the given n.
  void fail(std::string message);

  /// "holds", "refuted", "refuted-as-printed" or "error".
  std::string status() const;
  /// A refuted printed variant that has a corrected sibling.
  bool isKnownErratum() const;
};

}  // namespace factineq
