#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "factineq/expr.hpp"
#include "factineq/identity.hpp"
#include "factineq/numeric.hpp"
#include "factineq/sequence.hpp"

namespace factineq {

enum class Relation { AtMost, AtLeast };

/// "<=" or ">=".
std::string_view toString(Relation r);
/// True when `lhs relation rhs` holds.
bool satisfies(const BigRational& lhs, Relation relation, const BigRational& rhs);

enum class Alignment { Same, Opposite, Indeterminate };

std::string_view toString(Alignment a);

/// Same when both are nondecreasing or both nonincreasing (Constant counts as
/// either), Opposite when one of each, Indeterminate when either is None.
Alignment alignmentOf(Monotonicity x, Monotonicity y);

/// Direction of the means inequality predicted by the alignment.
enum class ExpectedRelation {
  ProductAtMost,   // meanX*meanY <= meanXY
  ProductAtLeast,  // meanX*meanY >= meanXY
  Both,            // a constant sequence forces equality
};

std::string_view toString(ExpectedRelation r);

/// The means inequality evaluated on one concrete pair of sequences.
struct ChebyshevCheck {
  std::int64_t n = 0;
  BigRational meanX;
  BigRational meanY;
  BigRational meanXY;
  BigRational product;  // meanX * meanY
  Monotonicity xClass = Monotonicity::None;
  Monotonicity yClass = Monotonicity::None;
  Alignment alignment = Alignment::Indeterminate;
  /// Unset for indeterminate alignment.
  std::optional<ExpectedRelation> expected;
  /// Unset (not applicable) for indeterminate alignment.
  std::optional<bool> satisfied;
  bool equality = false;
};

/// Checks (1/n sum x)(1/n sum y) against 1/n sum xy for equal-length, nonempty
/// term lists. Throws DomainError on empty or mismatched input.
ChebyshevCheck checkChebyshev(std::span<const BigRational> x, std::span<const BigRational> y);
ChebyshevCheck checkChebyshev(const SequenceDef& x, const SequenceDef& y, std::int64_t n);

/// A bound sum_{k=1}^n y_k (relation) rhs(n) obtained by clearing the
/// denominators of the means inequality:
///   rhs(n) = n * (sum x_k y_k)(n) / (sum x_k)(n).
struct DerivedBound {
  std::string xId;
  std::string yId;
  std::string xyIdentityId;
  std::string xPowerSumId;
  Relation relation;
  Expr rhs;

  BigRational rhsAt(std::int64_t n) const;
};

/// Largest k used to spot-check that the identities' summands match x*y and x.
inline constexpr std::int64_t kDerivationSpotCheck = 20;

/// Builds the bound for sum y from the x*y and x identities. Same alignment
/// gives <=, opposite gives >=. Throws DerivationInputError when a summand
/// disagrees with x*y or x for some k <= kDerivationSpotCheck, or when the
/// alignment is indeterminate.
DerivedBound deriveBound(const SequenceDef& x, const SequenceDef& y, const Identity& xyIdentity,
                         const Identity& xPowerSum, Alignment alignment);

/// (sum a)(sum 1/a) >= n^2 for strictly positive a.
struct ReciprocalCheck {
  std::int64_t n = 0;
  BigRational sumA;
  BigRational sumInvA;
  BigRational product;
  bool satisfied = false;
  bool equality = false;
};

/// Throws DomainError naming k when a_k <= 0.
ReciprocalCheck reciprocalBound(std::span<const BigRational> a);
ReciprocalCheck reciprocalBound(const SequenceDef& a, std::int64_t n);

}  // namespace factineq
