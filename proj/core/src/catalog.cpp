#include "factineq/catalog.hpp"

#include <set>

#include "factineq/errors.hpp"

namespace factineq {

namespace {

template <typename T>
void checkUnique(const std::vector<T>& items, std::set<std::string>& seen) {
  for (const auto& item : items) {
    if (!seen.insert(item.id).second) {
      throw UsageError("duplicate id '" + item.id + "'");
    }
  }
}

template <typename T>
const T* findById(const std::vector<T>& items, std::string_view id) {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

}  // namespace

Catalog::Catalog(std::vector<SequenceDef> sequences, std::vector<Identity> identities,
                 std::vector<BoundClaim> claims)
    : sequences_(std::move(sequences)), identities_(std::move(identities)), claims_(std::move(claims)) {
  std::set<std::string> seen;
  checkUnique(sequences_, seen);
  // Identity and claim ids share one namespace: both are sweep subjects.
  std::set<std::string> subjects;
  checkUnique(identities_, subjects);
  checkUnique(claims_, subjects);
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog(builtinSequences(), builtinIdentities(), builtinClaims());
  return catalog;
}

const SequenceDef* Catalog::findSequence(std::string_view id) const { return findById(sequences_, id); }
const Identity* Catalog::findIdentity(std::string_view id) const { return findById(identities_, id); }
const BoundClaim* Catalog::findClaim(std::string_view id) const { return findById(claims_, id); }

const SequenceDef& Catalog::sequence(std::string_view id) const {
  if (const auto* s = findSequence(id)) return *s;
  throw UnknownSubjectError("unknown sequence '" + std::string(id) + "'");
}

const Identity& Catalog::identity(std::string_view id) const {
  if (const auto* s = findIdentity(id)) return *s;
  throw UnknownSubjectError("unknown identity '" + std::string(id) + "'");
}

const BoundClaim& Catalog::claim(std::string_view id) const {
  if (const auto* s = findClaim(id)) return *s;
  throw UnknownSubjectError("unknown claim '" + std::string(id) + "'");
}

Catalog Catalog::withClaims(std::vector<BoundClaim> extra) const {
  std::vector<BoundClaim> all = claims_;
  for (auto& c : extra) all.push_back(std::move(c));
  return Catalog(sequences_, identities_, std::move(all));
}

const std::vector<BoundClaim>& listClaims() { return Catalog::builtin().claims(); }

DerivedBound deriveFor(const Catalog& catalog, const ChebyshevDerivation& d) {
  return deriveBound(catalog.sequence(d.xId), catalog.sequence(d.yId), catalog.identity(d.xyIdentityId),
                     catalog.identity(d.xPowerSumId), d.alignment);
}

namespace {

BigRational reindexed(const DerivedBound& bound, const std::optional<Reindex>& reindex, std::int64_t n) {
  if (!reindex) {
    return bound.rhsAt(n);
  }
  BigRational head = evalExpr(reindex->head, Bindings::withN(n));
  std::int64_t inner = n - reindex->shift;
  return inner >= 1 ? head + bound.rhsAt(inner) : head;
}

BigRational reciprocalRhs(const BoundClaim& base, std::int64_t n) {
  BigRational baseRhs = evalExpr(base.rhs, Bindings::withN(n));
  return BigRational(static_cast<long>(n * n)) / baseRhs;
}

}  // namespace

BigRational chainRhsAt(const Catalog& catalog, const BoundClaim& claim, std::int64_t n) {
  if (!claim.derivation) {
    throw DomainError("claim '" + claim.id + "' has no derivation");
  }
  if (const auto* cheb = std::get_if<ChebyshevDerivation>(&*claim.derivation)) {
    return reindexed(deriveFor(catalog, *cheb), cheb->reindex, n);
  }
  const auto& chain = std::get<ReciprocalChain>(*claim.derivation);
  return reciprocalRhs(catalog.claim(chain.baseClaimId), n);
}

namespace {

void checkChebyshevChain(const Catalog& catalog, const BoundClaim& claim, const ChebyshevDerivation& d,
                         DerivationCheck& out) {
  out.kind = "chebyshev";
  out.inputs = {{"x", d.xId},
                {"y", d.yId},
                {"xyIdentity", d.xyIdentityId},
                {"xPowerSum", d.xPowerSumId},
                {"alignment", std::string(toString(d.alignment))}};
  if (d.reindex) {
    out.inputs.emplace_back("reindexShift", std::to_string(d.reindex->shift));
    out.inputs.emplace_back("reindexHead", d.reindex->headSource);
    out.notes.push_back(d.reindex->note);
  }

  const SequenceDef& x = catalog.sequence(d.xId);
  const SequenceDef& y = catalog.sequence(d.yId);
  Alignment observed = alignmentOf(classifyMonotonicity(x, out.checkedUpTo), classifyMonotonicity(y, out.checkedUpTo));
  if (observed != d.alignment && out.checkedUpTo > 1) {
    out.failedPremises.push_back("alignment");
    out.notes.push_back("observed alignment over 1.." + std::to_string(out.checkedUpTo) + " is " +
                        std::string(toString(observed)));
  }
  for (const auto& idName : {d.xyIdentityId, d.xPowerSumId}) {
    if (!verifyIdentity(catalog.identity(idName), out.checkedUpTo).allHold) {
      out.failedPremises.push_back(idName);
    }
  }

  DerivedBound bound = deriveFor(catalog, d);
  if (bound.relation != claim.relation) {
    out.notes.push_back("derived relation " + std::string(toString(bound.relation)) + " differs from the claim's");
    out.reproducesRhs = false;
    return;
  }
  out.reproducesRhs = true;
  for (std::int64_t n = 1; n <= out.checkedUpTo; ++n) {
    if (reindexed(bound, d.reindex, n) != evalExpr(claim.rhs, Bindings::withN(n))) {
      out.reproducesRhs = false;
      out.firstMismatchN = n;
      break;
    }
  }
}

void checkReciprocalChain(const Catalog& catalog, const BoundClaim& claim, const ReciprocalChain& chain,
                          DerivationCheck& out) {
  out.kind = "reciprocal-chain";
  out.inputs = {{"base", chain.baseClaimId}, {"a", chain.sequenceId}};
  const BoundClaim& base = catalog.claim(chain.baseClaimId);
  const SequenceDef& a = catalog.sequence(chain.sequenceId);

  auto values = terms(a, out.checkedUpTo);
  for (std::int64_t n = 1; n <= out.checkedUpTo; ++n) {
    if (!reciprocalBound(std::span(values).first(static_cast<std::size_t>(n))).satisfied) {
      out.failedPremises.push_back("reciprocal-step");
      break;
    }
  }
  if (!verifyClaim(base, 1, out.checkedUpTo).allHold) {
    out.failedPremises.push_back(base.id);
  }
  if (base.derivation) {
    DerivationCheck baseCheck = checkDerivation(catalog, base, out.checkedUpTo);
    for (const auto& premise : baseCheck.failedPremises) {
      out.failedPremises.push_back(base.id + ":" + premise);
    }
  }

  out.reproducesRhs = true;
  for (std::int64_t n = 1; n <= out.checkedUpTo; ++n) {
    if (reciprocalRhs(base, n) != evalExpr(claim.rhs, Bindings::withN(n))) {
      out.reproducesRhs = false;
      out.firstMismatchN = n;
      break;
    }
  }
}

}  // namespace

DerivationCheck checkDerivation(const Catalog& catalog, const BoundClaim& claim, std::int64_t nLimit) {
  DerivationCheck out;
  out.checkedUpTo = nLimit;
  if (!claim.derivation) {
    out.kind = "none";
    return out;
  }
  if (nLimit < 1) {
    throw UsageError("derivation check needs nLimit >= 1");
  }
  try {
    if (const auto* cheb = std::get_if<ChebyshevDerivation>(&*claim.derivation)) {
      checkChebyshevChain(catalog, claim, *cheb, out);
    } else {
      checkReciprocalChain(catalog, claim, std::get<ReciprocalChain>(*claim.derivation), out);
    }
  } catch (const DerivationInputError& e) {
    out.reproducesRhs = false;
    out.inputError = e.what();
  }
  return out;
}

}  // namespace factineq
