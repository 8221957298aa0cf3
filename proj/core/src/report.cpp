#include "factineq/report.hpp"

namespace factineq {

std::string_view toString(SubjectKind kind) {
  switch (kind) {
    case SubjectKind::Identity:
      return "identity";
    case SubjectKind::Claim:
      return "claim";
    case SubjectKind::Telescope:
      break;
  }
  return "telescope";
}

void RangeReport::record(Verdict verdict) {
  if (!verdict.holds) {
    counterexamples.push_back({verdict.n, verdict.lhs, verdict.rhs});
    allHold = false;
  }
  if (verdict.equality) {
    equalityPoints.push_back(verdict.n);
  }
  if (verdict.tightness && (!minTightness || *verdict.tightness < minTightness->ratio)) {
    minTightness = TightnessPoint{verdict.n, *verdict.tightness};
  }
  verdicts.push_back(std::move(verdict));
}

void RangeReport::fail(std::string message) {
  error = std::move(message);
  allHold = false;
}

bool RangeReport::isKnownErratum() const {
  return !error && !counterexamples.empty() && variant == "printed" && correctedSibling.has_value();
}

std::string RangeReport::status() const {
  if (error) return "error";
  if (counterexamples.empty()) return "holds";
  if (isKnownErratum()) return "refuted-as-printed";
  return "refuted";
}

}  // namespace factineq
