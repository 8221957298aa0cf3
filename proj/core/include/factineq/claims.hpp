#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "factineq/chebyshev.hpp"
#include "factineq/expr.hpp"
#include "factineq/report.hpp"
#include "factineq/sequence.hpp"

namespace factineq {

enum class Variant { Printed, Corrected, User };

std::string_view toString(Variant v);

/// Shift applied after a Chebyshev derivation: the claim's rhs at n equals
/// head(n) + derived(n - shift), with derived(0) taken as the empty sum 0.
struct Reindex {
  std::int64_t shift = 1;
  Expr head;
  std::string headSource;
  std::string note;
};

struct ChebyshevDerivation {
  std::string xId;
  std::string yId;
  std::string xyIdentityId;
  std::string xPowerSumId;
  Alignment alignment = Alignment::Same;
  std::optional<Reindex> reindex;
};

/// sum 1/a >= n^2 / sum a >= n^2 / base.rhs, where base bounds sum a from above.
struct ReciprocalChain {
  std::string baseClaimId;
  std::string sequenceId;
};

using Derivation = std::variant<ChebyshevDerivation, ReciprocalChain>;

/// sum_{k=1}^n summand(k) (relation) rhs(n).
struct BoundClaim {
  std::string id;
  SequenceDef summand;
  Relation relation;
  Expr rhs;
  std::string rhsSource;
  Variant variant = Variant::Printed;
  std::optional<Derivation> derivation;
  std::optional<std::string> correctedSibling;
  std::string note;

  /// Builds a claim from expression text. The summand may only use k and
  /// the bound only n.
  static BoundClaim make(std::string id, std::string_view summand, Relation relation, std::string_view rhs,
                         Variant variant);

  std::string statement() const;
};

/// Verdict for one n given the exact left-hand side.
Verdict evaluateClaim(const BoundClaim& claim, std::int64_t n, const BigRational& lhs);

/// Verdicts for every n in nMin..nMax, aggregated. Evaluation errors
/// propagate with the offending n.
RangeReport verifyClaim(const BoundClaim& claim, std::int64_t nMin, std::int64_t nMax);

struct TightnessSample {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
  /// Unset when the ratio's denominator is zero.
  std::optional<BigRational> ratio;
  std::string decimal;
  bool holds = false;
};

/// Tightness ratio for n in 1..nMax, flagged where the claim fails.
std::vector<TightnessSample> tightnessSweep(const BoundClaim& claim, std::int64_t nMax);

/// The nine inequalities with their printed and corrected variants, in
/// registry order, derivations populated.
std::vector<BoundClaim> builtinClaims();

}  // namespace factineq
