#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "factineq/claims.hpp"
#include "factineq/identity.hpp"
#include "factineq/report.hpp"
#include "factineq/sequence.hpp"

namespace factineq {

/// Immutable set of sequences, identities and claims with lookup by id.
class Catalog {
 public:
  /// Throws UsageError on duplicate ids.
  Catalog(std::vector<SequenceDef> sequences, std::vector<Identity> identities, std::vector<BoundClaim> claims);

  /// Built-in sequences, identities and claims.
  static const Catalog& builtin();

  const std::vector<SequenceDef>& sequences() const noexcept { return sequences_; }
  const std::vector<Identity>& identities() const noexcept { return identities_; }
  const std::vector<BoundClaim>& claims() const noexcept { return claims_; }

  const SequenceDef* findSequence(std::string_view id) const;
  const Identity* findIdentity(std::string_view id) const;
  const BoundClaim* findClaim(std::string_view id) const;

  /// Lookups that throw UnknownSubjectError.
  const SequenceDef& sequence(std::string_view id) const;
  const Identity& identity(std::string_view id) const;
  const BoundClaim& claim(std::string_view id) const;

  /// Copy of this catalog with `extra` claims appended.
  Catalog withClaims(std::vector<BoundClaim> extra) const;

 private:
  std::vector<SequenceDef> sequences_;
  std::vector<Identity> identities_;
  std::vector<BoundClaim> claims_;
};

/// Built-in claims in registry order.
const std::vector<BoundClaim>& listClaims();

/// The DerivedBound behind a Chebyshev derivation.
DerivedBound deriveFor(const Catalog& catalog, const ChebyshevDerivation& derivation);

/// Right-hand side produced by the claim's derivation chain at n, including
/// any reindexing. Throws DomainError for claims without a derivation.
BigRational chainRhsAt(const Catalog& catalog, const BoundClaim& claim, std::int64_t n);

/// Re-runs the claim's derivation for n in 1..nLimit: whether the chain
/// reproduces the claim's rhs, and which premises fail.
DerivationCheck checkDerivation(const Catalog& catalog, const BoundClaim& claim, std::int64_t nLimit);

}  // namespace factineq
