#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factineq/expr.hpp"
#include "factineq/report.hpp"
#include "factineq/sequence.hpp"

namespace factineq {

enum class Provenance { Printed, Corrected, Plumbing };

std::string_view toString(Provenance p);

/// summand(k) = c + g(k+1) - g(k), which certifies
/// sum_{k=1}^n summand(k) = c*n + g(n+1) - g(1).
struct TelescopeWitness {
  BigRational c;
  Expr g;
  std::string cSource;
  std::string gSource;
};

/// A closed-form summation identity sum_{k=1}^n summand(k) = closedForm(n).
struct Identity {
  std::string id;
  SequenceDef summand;
  Expr closedForm;
  std::string closedFormSource;
  std::optional<TelescopeWitness> witness;
  Provenance provenance = Provenance::Printed;
  std::optional<std::string> correctedSibling;
  std::string note;

  /// Builds an identity from expression text. `witnessC` and `witnessG` are
  /// both empty for identities without a telescoping witness.
  static Identity make(std::string id, std::string_view summand, std::string_view closedForm,
                       Provenance provenance, std::string_view witnessC = {}, std::string_view witnessG = {});

  std::string statement() const;
};

/// closedForm evaluated at n.
BigRational closedFormAt(const Identity& identity, std::int64_t n);

/// c*n + g(n+1) - g(1). Requires a witness.
BigRational witnessSumAt(const Identity& identity, std::int64_t n);

/// Exact partial sums compared against the closed form for every n in
/// nMin..nMax. Evaluation errors propagate.
RangeReport verifyIdentity(const Identity& identity, std::int64_t nMax, std::int64_t nMin = 1);

struct TelescopeFailure {
  std::int64_t k = 0;
  BigRational summand;
  BigRational witnessValue;
};

struct TelescopeResult {
  bool applicable = false;
  bool pass = false;
  std::int64_t kMax = 0;
  std::vector<TelescopeFailure> failures;

  std::optional<TelescopeFailure> firstFailure() const {
    if (failures.empty()) return std::nullopt;
    return failures.front();
  }
};

/// Checks summand(k) = c + g(k+1) - g(k) for k in 1..kMax. Identities
/// without a witness give a not-applicable result.
TelescopeResult verifyTelescope(const Identity& identity, std::int64_t kMax);

/// verifyTelescope over kMin..kMax folded into a report (kind Telescope).
RangeReport telescopeReport(const Identity& identity, std::int64_t kMax, std::int64_t kMin = 1);

/// The summation identities behind the built-in claims, in registry order.
std::vector<Identity> builtinIdentities();

}  // namespace factineq
