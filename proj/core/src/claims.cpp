#include "factineq/claims.hpp"

#include "factineq/errors.hpp"

namespace factineq {

std::string_view toString(Variant v) {
  switch (v) {
    case Variant::Printed:
      return "printed";
    case Variant::Corrected:
      return "corrected";
    case Variant::User:
      break;
  }
  return "user";
}

BoundClaim BoundClaim::make(std::string id, std::string_view summand, Relation relation, std::string_view rhs,
                            Variant variant) {
  Expr bound = parse(rhs);
  if (freeVariables(bound).contains(Variable::K)) {
    throw DomainError("bound of claim '" + id + "' must only use n");
  }
  SequenceDef seq = SequenceDef::fromText(id + ".summand", summand);
  return BoundClaim{
      .id = std::move(id),
      .summand = std::move(seq),
      .relation = relation,
      .rhs = std::move(bound),
      .rhsSource = std::string(rhs),
      .variant = variant,
      .derivation = std::nullopt,
      .correctedSibling = std::nullopt,
      .note = {},
  };
}

std::string BoundClaim::statement() const {
  return "sum_{k=1}^n " + summand.source + " " + std::string(toString(relation)) + " " + rhsSource;
}

Verdict evaluateClaim(const BoundClaim& claim, std::int64_t n, const BigRational& lhs) {
  Verdict v;
  v.n = n;
  v.lhs = lhs;
  v.rhs = evalExpr(claim.rhs, Bindings::withN(n));
  v.holds = satisfies(v.lhs, claim.relation, v.rhs);
  v.equality = v.lhs == v.rhs;
  const BigRational& num = claim.relation == Relation::AtMost ? v.lhs : v.rhs;
  const BigRational& den = claim.relation == Relation::AtMost ? v.rhs : v.lhs;
  if (!den.isZero()) {
    v.tightness = num / den;
  }
  return v;
}

RangeReport verifyClaim(const BoundClaim& claim, std::int64_t nMin, std::int64_t nMax) {
  if (nMin < 1 || nMax < nMin) {
    throw UsageError("claim range must satisfy 1 <= nMin <= nMax");
  }
  RangeReport report;
  report.subjectId = claim.id;
  report.subjectKind = SubjectKind::Claim;
  report.variant = std::string(toString(claim.variant));
  report.statement = claim.statement();
  report.nMin = nMin;
  report.nMax = nMax;
  report.correctedSibling = claim.correctedSibling;

  PartialSumTable sums(claim.summand);
  for (std::int64_t n = nMin; n <= nMax; ++n) {
    try {
      report.record(evaluateClaim(claim, n, sums.sum(n)));
    } catch (const Error&) {
      rethrowWithContext(" (n = " + std::to_string(n) + ")");
    }
  }
  return report;
}

std::vector<TightnessSample> tightnessSweep(const BoundClaim& claim, std::int64_t nMax) {
  std::vector<TightnessSample> out;
  PartialSumTable sums(claim.summand);
  for (std::int64_t n = 1; n <= nMax; ++n) {
    Verdict v = evaluateClaim(claim, n, sums.sum(n));
    TightnessSample s;
    s.n = n;
    s.holds = v.holds;
    s.decimal = v.tightness ? toDecimal(*v.tightness) : "undefined";
    s.lhs = std::move(v.lhs);
    s.rhs = std::move(v.rhs);
    s.ratio = std::move(v.tightness);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

BoundClaim withChebyshev(BoundClaim claim, std::string x, std::string y, std::string xy, std::string px,
                         Alignment alignment) {
  claim.derivation = ChebyshevDerivation{std::move(x), std::move(y), std::move(xy), std::move(px), alignment, {}};
  return claim;
}

BoundClaim withChain(BoundClaim claim, std::string base, std::string sequence) {
  claim.derivation = ReciprocalChain{std::move(base), std::move(sequence)};
  return claim;
}

BoundClaim annotate(BoundClaim claim, std::optional<std::string> sibling, std::string note) {
  claim.correctedSibling = std::move(sibling);
  claim.note = std::move(note);
  return claim;
}

}  // namespace

std::vector<BoundClaim> builtinClaims() {
  constexpr auto le = Relation::AtMost;
  constexpr auto ge = Relation::AtLeast;
  constexpr auto printed = Variant::Printed;
  constexpr auto corrected = Variant::Corrected;
  constexpr auto same = Alignment::Same;
  constexpr auto opposite = Alignment::Opposite;

  std::vector<BoundClaim> claims;

  claims.push_back(withChebyshev(BoundClaim::make("app1", "k!", le, "2*((n+1)! - 1)/(n+1)", printed), "x.k",
                                 "y.fact", "I1", "P1", same));

  claims.push_back(annotate(
      withChebyshev(BoundClaim::make("app2-printed", "k!", le, "3*(n+1)*(n+1)!/(n^2 + 3*n + 5)", printed),
                    "x.k2k1", "y.fact", "I2p", "P3", same),
      "app2-corrected", "holds as stated, but its derivation uses the refuted identity I2p"));
  claims.push_back(withChebyshev(
      BoundClaim::make("app2-corrected", "k!", le, "3*((n+1)*(n+1)! - 1)/(n^2 + 3*n + 5)", corrected), "x.k2k1",
      "y.fact", "I2c", "P3", same));

  claims.push_back(
      withChain(BoundClaim::make("app3", "1/k!", ge, "n^2*(n+1)/(2*((n+1)! - 1))", printed), "app1", "y.fact"));
  claims.push_back(annotate(
      withChain(BoundClaim::make("app4", "1/k!", ge, "n^2*(n^2 + 3*n + 5)/(3*(n+1)*(n+1)!)", printed),
                "app2-printed", "y.fact"),
      std::nullopt, "chains through app2-printed as written"));

  {
    BoundClaim app5 = withChebyshev(BoundClaim::make("app5", "1/k!", ge, "1 + (2/n)*(1 - 1/n!)", printed), "x.k",
                                    "y.invfact_shift", "I3", "P1", opposite);
    std::get<ChebyshevDerivation>(*app5.derivation).reindex =
        Reindex{1, parse("1"), "1",
                "sum_{k=1}^n 1/k! = 1 + sum_{k=1}^{n-1} 1/(k+1)!; the bound for 1/(k+1)! is applied at n-1"};
    claims.push_back(std::move(app5));
  }

  claims.push_back(annotate(
      withChebyshev(
          BoundClaim::make("app6-printed", "1/((k+2)^2*k!)", ge, "(2/(n+5))*(1 - 1/(n+2)!)", printed),
          "x.kplus2", "y.app6", "I4p", "P4", opposite),
      "app6-corrected", "printed bound uses 1 - 1/(n+2)! where the telescoping sum gives 1/2 - 1/(n+2)!"));
  claims.push_back(withChebyshev(
      BoundClaim::make("app6-corrected", "1/((k+2)^2*k!)", ge, "(2/(n+5))*(1/2 - 1/(n+2)!)", corrected),
      "x.kplus2", "y.app6", "I4c", "P4", opposite));

  claims.push_back(annotate(
      withChebyshev(BoundClaim::make("app7-printed", "1/(k*(k+1)*(k+2)!)", ge,
                                     "(6/(2*n^2 + 9*n + 1))*(1/2 - 1/((n+1)*(n+2)!))", printed),
                    "x.k2_2k_2", "y.app7", "I5", "P5", opposite),
      "app7-corrected", "printed denominator 2n^2+9n+1; sum of k^2+2k+2 gives n(2n^2+9n+19)/6"));
  claims.push_back(withChebyshev(BoundClaim::make("app7-corrected", "1/(k*(k+1)*(k+2)!)", ge,
                                                  "(6/(2*n^2 + 9*n + 19))*(1/2 - 1/((n+1)*(n+2)!))", corrected),
                                 "x.k2_2k_2", "y.app7", "I5", "P5", opposite));

  claims.push_back(withChebyshev(BoundClaim::make("app8", "1/(4*k^4 + 1)", ge, "n/(2*n^2 + 2*n + 1)", printed),
                                 "x.4k", "y.app8", "I6", "P6", opposite));

  claims.push_back(annotate(
      withChebyshev(BoundClaim::make("app9-printed", "1/(4*k^4 - 1)", ge, "3*n/(2*n + 1)^2", printed), "x.k2",
                    "y.app9", "I7p", "P2", opposite),
      "app9-corrected", "derivation uses I7p, whose closed form belongs to the summand k^2/(4k^2-1)"));
  claims.push_back(
      withChebyshev(BoundClaim::make("app9-corrected", "1/(4*k^2 - 1)", ge, "3*n/(2*n + 1)^2", corrected), "x.k2",
                    "y.app9c", "I7c", "P2", opposite));

  return claims;
}

}  // namespace factineq
