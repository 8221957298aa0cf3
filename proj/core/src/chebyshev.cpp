#include "factineq/chebyshev.hpp"

#include "factineq/errors.hpp"

namespace factineq {

std::string_view toString(Relation r) { return r == Relation::AtMost ? "<=" : ">="; }

bool satisfies(const BigRational& lhs, Relation relation, const BigRational& rhs) {
  return relation == Relation::AtMost ? lhs <= rhs : lhs >= rhs;
}

std::string_view toString(Alignment a) {
  switch (a) {
    case Alignment::Same:
      return "same";
    case Alignment::Opposite:
      return "opposite";
    case Alignment::Indeterminate:
      break;
  }
  return "indeterminate";
}

std::string_view toString(ExpectedRelation r) {
  switch (r) {
    case ExpectedRelation::ProductAtMost:
      return "product <= meanXY";
    case ExpectedRelation::ProductAtLeast:
      return "product >= meanXY";
    case ExpectedRelation::Both:
      break;
  }
  return "product = meanXY";
}

Alignment alignmentOf(Monotonicity x, Monotonicity y) {
  if (x == Monotonicity::None || y == Monotonicity::None) return Alignment::Indeterminate;
  if ((isNondecreasing(x) && isNondecreasing(y)) || (isNonincreasing(x) && isNonincreasing(y))) {
    return Alignment::Same;
  }
  return Alignment::Opposite;
}

ChebyshevCheck checkChebyshev(std::span<const BigRational> x, std::span<const BigRational> y) {
  if (x.empty() || x.size() != y.size()) {
    throw DomainError("Chebyshev check needs two nonempty sequences of equal length");
  }
  ChebyshevCheck check;
  check.n = static_cast<std::int64_t>(x.size());
  BigRational sumX;
  BigRational sumY;
  BigRational sumXY;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sumX += x[i];
    sumY += y[i];
    sumXY += x[i] * y[i];
  }
  BigRational count(static_cast<long>(check.n));
  check.meanX = sumX / count;
  check.meanY = sumY / count;
  check.meanXY = sumXY / count;
  check.product = check.meanX * check.meanY;
  check.equality = check.product == check.meanXY;

  check.xClass = classifyMonotonicity(x);
  check.yClass = classifyMonotonicity(y);
  check.alignment = alignmentOf(check.xClass, check.yClass);
  if (check.alignment == Alignment::Indeterminate) {
    return check;
  }
  if (check.xClass == Monotonicity::Constant || check.yClass == Monotonicity::Constant) {
    check.expected = ExpectedRelation::Both;
    check.satisfied = check.equality;
  } else if (check.alignment == Alignment::Same) {
    check.expected = ExpectedRelation::ProductAtMost;
    check.satisfied = check.product <= check.meanXY;
  } else {
    check.expected = ExpectedRelation::ProductAtLeast;
    check.satisfied = check.product >= check.meanXY;
  }
  return check;
}

ChebyshevCheck checkChebyshev(const SequenceDef& x, const SequenceDef& y, std::int64_t n) {
  if (n < 1) {
    throw DomainError("Chebyshev check needs n >= 1");
  }
  auto xs = terms(x, n);
  auto ys = terms(y, n);
  return checkChebyshev(xs, ys);
}

BigRational DerivedBound::rhsAt(std::int64_t n) const { return evalExpr(rhs, Bindings::withN(n)); }

DerivedBound deriveBound(const SequenceDef& x, const SequenceDef& y, const Identity& xyIdentity,
                         const Identity& xPowerSum, Alignment alignment) {
  if (alignment == Alignment::Indeterminate) {
    throw DerivationInputError("cannot derive a bound for indeterminate alignment");
  }
  for (std::int64_t k = 1; k <= kDerivationSpotCheck; ++k) {
    BigRational xk = evalTerm(x, k);
    BigRational yk = evalTerm(y, k);
    BigRational xy = evalTerm(xyIdentity.summand, k);
    if (xy != xk * yk) {
      throw DerivationInputError("summand of " + xyIdentity.id + " (" + xyIdentity.summand.source +
                                 ") is not x*y = (" + x.source + ")*(" + y.source + ") at k = " +
                                 std::to_string(k) + ": " + xy.toString() + " vs " + (xk * yk).toString());
    }
    BigRational px = evalTerm(xPowerSum.summand, k);
    if (px != xk) {
      throw DerivationInputError("summand of " + xPowerSum.id + " (" + xPowerSum.summand.source +
                                 ") is not x = " + x.source + " at k = " + std::to_string(k));
    }
  }
  return DerivedBound{
      .xId = x.id,
      .yId = y.id,
      .xyIdentityId = xyIdentity.id,
      .xPowerSumId = xPowerSum.id,
      .relation = alignment == Alignment::Same ? Relation::AtMost : Relation::AtLeast,
      .rhs = Expr::div(Expr::mul(Expr::var(Variable::N), xyIdentity.closedForm), xPowerSum.closedForm),
  };
}

ReciprocalCheck reciprocalBound(std::span<const BigRational> a) {
  if (a.empty()) {
    throw DomainError("reciprocal bound needs a nonempty sequence");
  }
  ReciprocalCheck check;
  check.n = static_cast<std::int64_t>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sign() <= 0) {
      throw DomainError("reciprocal bound needs positive terms; term at k = " + std::to_string(i + 1) + " is " +
                        a[i].toString());
    }
    check.sumA += a[i];
    check.sumInvA += a[i].reciprocal();
  }
  check.product = check.sumA * check.sumInvA;
  BigRational nSquared(static_cast<long>(check.n * check.n));
  check.satisfied = check.product >= nSquared;
  check.equality = check.product == nSquared;
  return check;
}

ReciprocalCheck reciprocalBound(const SequenceDef& a, std::int64_t n) {
  if (n < 1) {
    throw DomainError("reciprocal bound needs n >= 1");
  }
  auto values = terms(a, n);
  return reciprocalBound(values);
}

}  // namespace factineq
