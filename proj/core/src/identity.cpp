#include "factineq/identity.hpp"

#include "factineq/errors.hpp"

namespace factineq {

std::string_view toString(Provenance p) {
  switch (p) {
    case Provenance::Printed:
      return "printed";
    case Provenance::Corrected:
      return "corrected";
    case Provenance::Plumbing:
      break;
  }
  return "plumbing";
}

Identity Identity::make(std::string id, std::string_view summand, std::string_view closedForm,
                        Provenance provenance, std::string_view witnessC, std::string_view witnessG) {
  Identity out{
      .id = id,
      .summand = SequenceDef::fromText(id + ".summand", summand),
      .closedForm = parse(closedForm),
      .closedFormSource = std::string(closedForm),
      .witness = std::nullopt,
      .provenance = provenance,
      .correctedSibling = std::nullopt,
      .note = {},
  };
  if (freeVariables(out.closedForm).contains(Variable::K)) {
    throw DomainError("closed form of '" + id + "' must only use n");
  }
  if (!witnessG.empty()) {
    Expr c = parse(witnessC.empty() ? std::string_view("0") : witnessC);
    if (!freeVariables(c).empty()) {
      throw DomainError("telescope constant of '" + id + "' must be a constant");
    }
    Expr g = parse(witnessG);
    if (freeVariables(g).contains(Variable::N)) {
      throw DomainError("telescope function of '" + id + "' must only use k");
    }
    out.witness = TelescopeWitness{evalExpr(c, {}), std::move(g),
                                   std::string(witnessC.empty() ? "0" : witnessC), std::string(witnessG)};
  }
  return out;
}

std::string Identity::statement() const {
  return "sum_{k=1}^n " + summand.source + " = " + closedFormSource;
}

BigRational closedFormAt(const Identity& identity, std::int64_t n) {
  return evalExpr(identity.closedForm, Bindings::withN(n));
}

BigRational witnessSumAt(const Identity& identity, std::int64_t n) {
  if (!identity.witness) {
    throw DomainError("identity '" + identity.id + "' has no telescoping witness");
  }
  const auto& w = *identity.witness;
  return w.c * BigRational(static_cast<long>(n)) + evalExpr(w.g, Bindings::withK(n + 1)) -
         evalExpr(w.g, Bindings::withK(1));
}

RangeReport verifyIdentity(const Identity& identity, std::int64_t nMax, std::int64_t nMin) {
  if (nMin < 1 || nMax < nMin) {
    throw UsageError("identity range must satisfy 1 <= nMin <= nMax");
  }
  RangeReport report;
  report.subjectId = identity.id;
  report.subjectKind = SubjectKind::Identity;
  report.variant = std::string(toString(identity.provenance));
  report.statement = identity.statement();
  report.nMin = nMin;
  report.nMax = nMax;
  report.correctedSibling = identity.correctedSibling;

  PartialSumTable sums(identity.summand);
  for (std::int64_t n = nMin; n <= nMax; ++n) {
    try {
      Verdict v;
      v.n = n;
      v.lhs = sums.sum(n);
      v.rhs = closedFormAt(identity, n);
      v.holds = v.lhs == v.rhs;
      v.equality = v.holds;
      report.record(std::move(v));
    } catch (const Error&) {
      rethrowWithContext(" (n = " + std::to_string(n) + ")");
    }
  }
  return report;
}

namespace {

// Evaluates g(1..kMax+1) once and compares each summand with c + g(k+1) - g(k).
template <typename OnCheck>
void scanWitness(const Identity& identity, std::int64_t kMin, std::int64_t kMax, OnCheck&& onCheck) {
  const auto& w = *identity.witness;
  BigRational gPrev = evalExpr(w.g, Bindings::withK(kMin));
  for (std::int64_t k = kMin; k <= kMax; ++k) {
    BigRational gNext = evalExpr(w.g, Bindings::withK(k + 1));
    BigRational summand = evalTerm(identity.summand, k);
    BigRational witnessValue = w.c + gNext - gPrev;
    onCheck(k, std::move(summand), std::move(witnessValue));
    gPrev = std::move(gNext);
  }
}

}  // namespace

TelescopeResult verifyTelescope(const Identity& identity, std::int64_t kMax) {
  TelescopeResult result;
  result.kMax = kMax;
  if (!identity.witness) {
    return result;
  }
  result.applicable = true;
  scanWitness(identity, 1, kMax, [&](std::int64_t k, BigRational summand, BigRational witnessValue) {
    if (summand != witnessValue) {
      result.failures.push_back({k, std::move(summand), std::move(witnessValue)});
    }
  });
  result.pass = result.failures.empty();
  return result;
}

RangeReport telescopeReport(const Identity& identity, std::int64_t kMax, std::int64_t kMin) {
  if (!identity.witness) {
    throw DomainError("identity '" + identity.id + "' has no telescoping witness");
  }
  RangeReport report;
  report.subjectId = identity.id + "/telescope";
  report.subjectKind = SubjectKind::Telescope;
  report.variant = std::string(toString(identity.provenance));
  report.statement = identity.summand.source + " = " + identity.witness->cSource + " + g(k+1) - g(k), g(k) = " +
                     identity.witness->gSource;
  report.nMin = kMin;
  report.nMax = kMax;
  scanWitness(identity, kMin, kMax, [&](std::int64_t k, BigRational summand, BigRational witnessValue) {
    Verdict v;
    v.n = k;
    v.holds = summand == witnessValue;
    v.equality = v.holds;
    v.lhs = std::move(summand);
    v.rhs = std::move(witnessValue);
    report.record(std::move(v));
  });
  return report;
}

std::vector<Identity> builtinIdentities() {
  std::vector<Identity> ids;
  auto add = [&](Identity id, std::optional<std::string> sibling = std::nullopt, std::string note = {}) {
    id.correctedSibling = std::move(sibling);
    id.note = std::move(note);
    ids.push_back(std::move(id));
  };
  using P = Provenance;

  add(Identity::make("I1", "k*k!", "(n+1)! - 1", P::Printed, "0", "k!"));
  add(Identity::make("I2p", "(k^2+k+1)*k!", "(n+1)*(n+1)!", P::Printed), "I2c",
      "printed closed form is off by one; suspected typo for (n+1)(n+1)! - 1");
  add(Identity::make("I2c", "(k^2+k+1)*k!", "(n+1)*(n+1)! - 1", P::Corrected, "0", "k*k!"));
  add(Identity::make("I3", "k/(k+1)!", "1 - 1/(n+1)!", P::Printed, "0", "-1/k!"));
  add(Identity::make("I4p", "1/((k+2)^2*k!)", "1 - 1/(n+2)!", P::Printed), "I4c",
      "printed middle equation repeats the left-hand sum; encoded with the left-hand summand and the "
      "printed closed form");
  add(Identity::make("I4c", "1/((k+2)*k!)", "1/2 - 1/(n+2)!", P::Corrected, "0", "-1/(k+1)!"));
  add(Identity::make("I5", "(k^2+2*k+2)/(k*(k+1)*(k+2)!)", "1/2 - 1/((n+1)*(n+2)!)", P::Printed, "0",
                     "-1/(k*(k+1)!)"));
  add(Identity::make("I6", "4*k/(4*k^4+1)", "2*n*(n+1)/(2*n^2+2*n+1)", P::Printed, "0", "-1/(2*k^2-2*k+1)"),
      std::nullopt, "partial fractions from 4k^4+1 = (2k^2-2k+1)(2k^2+2k+1)");
  add(Identity::make("I7p", "k^2/(4*k^4-1)", "n*(n+1)/(2*(2*n+1))", P::Printed), "I7c",
      "printed closed form matches the summand k^2/(4k^2-1), not k^2/(4k^4-1)");
  add(Identity::make("I7c", "k^2/(4*k^2-1)", "n*(n+1)/(2*(2*n+1))", P::Corrected, "1/4", "-1/(8*(2*k-1))"));

  add(Identity::make("P1", "k", "n*(n+1)/2", P::Plumbing));
  add(Identity::make("P2", "k^2", "n*(n+1)*(2*n+1)/6", P::Plumbing));
  add(Identity::make("P3", "k^2+k+1", "n*(n^2+3*n+5)/3", P::Plumbing));
  add(Identity::make("P4", "k+2", "n*(n+5)/2", P::Plumbing));
  add(Identity::make("P5", "k^2+2*k+2", "n*(2*n^2+9*n+19)/6", P::Plumbing));
  add(Identity::make("P6", "4*k", "2*n*(n+1)", P::Plumbing));
  return ids;
}

}  // namespace factineq
