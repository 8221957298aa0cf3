#include "factineq/sequence.hpp"

#include "factineq/errors.hpp"

namespace factineq {

SequenceDef SequenceDef::fromText(std::string id, std::string_view text, std::string description) {
  Expr term = parse(text);
  if (freeVariables(term).contains(Variable::N)) {
    throw DomainError("sequence '" + id + "' term must only use k: " + std::string(text));
  }
  return SequenceDef{std::move(id), std::move(term), std::string(text), std::move(description)};
}

std::string_view toString(Monotonicity m) {
  switch (m) {
    case Monotonicity::Nondecreasing:
      return "nondecreasing";
    case Monotonicity::Nonincreasing:
      return "nonincreasing";
    case Monotonicity::Constant:
      return "constant";
    case Monotonicity::None:
      break;
  }
  return "none";
}

BigRational evalTerm(const SequenceDef& seq, std::int64_t k) {
  if (k < 1) {
    throw DomainError("sequence index must be positive, got " + std::to_string(k));
  }
  return evalExpr(seq.term, Bindings::withK(k));
}

BigRational partialSum(const SequenceDef& seq, std::int64_t n) {
  if (n < 1) {
    throw DomainError("partial sum needs n >= 1, got " + std::to_string(n));
  }
  BigRational sum;
  for (std::int64_t k = 1; k <= n; ++k) {
    sum += evalTerm(seq, k);
  }
  return sum;
}

std::vector<BigRational> terms(const SequenceDef& seq, std::int64_t n) {
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
  for (std::int64_t k = 1; k <= n; ++k) {
    out.push_back(evalTerm(seq, k));
  }
  return out;
}

Monotonicity classifyMonotonicity(std::span<const BigRational> values) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    auto c = values[i - 1] <=> values[i];
    if (c > 0) up = false;
    if (c < 0) down = false;
  }
  if (up && down) return Monotonicity::Constant;
  if (up) return Monotonicity::Nondecreasing;
  if (down) return Monotonicity::Nonincreasing;
  return Monotonicity::None;
}

Monotonicity classifyMonotonicity(const SequenceDef& seq, std::int64_t n) {
  if (n < 1) {
    throw DomainError("monotonicity range must be nonempty");
  }
  return classifyMonotonicity(terms(seq, n));
}

bool isNondecreasing(Monotonicity m) {
  return m == Monotonicity::Nondecreasing || m == Monotonicity::Constant;
}

bool isNonincreasing(Monotonicity m) {
  return m == Monotonicity::Nonincreasing || m == Monotonicity::Constant;
}

void PartialSumTable::extendTo(std::int64_t n) {
  while (static_cast<std::int64_t>(terms_.size()) < n) {
    auto k = static_cast<std::int64_t>(terms_.size()) + 1;
    terms_.push_back(evalTerm(seq_, k));
    sums_.push_back(sums_.back() + terms_.back());
  }
}

const BigRational& PartialSumTable::term(std::int64_t k) {
  if (k < 1) {
    throw DomainError("sequence index must be positive, got " + std::to_string(k));
  }
  extendTo(k);
  return terms_[static_cast<std::size_t>(k - 1)];
}

const BigRational& PartialSumTable::sum(std::int64_t n) {
  if (n < 0) {
    throw DomainError("partial sum length must be nonnegative");
  }
  extendTo(n);
  return sums_[static_cast<std::size_t>(n)];
}

SequenceValidation validateSequence(const SequenceDef& seq, std::int64_t kMax) {
  SequenceValidation v;
  v.kMax = kMax;
  for (std::int64_t k = 1; k <= kMax; ++k) {
    try {
      BigRational t = evalTerm(seq, k);
      if (t.sign() <= 0 && v.positive) {
        v.positive = false;
        v.firstNonpositiveK = k;
      }
    } catch (const Error& e) {
      v.evaluable = false;
      v.errorK = k;
      v.error = e.what();
      break;
    }
  }
  return v;
}

std::vector<SequenceDef> builtinSequences() {
  return {
      SequenceDef::fromText("x.k", "k", "k"),
      SequenceDef::fromText("x.k2k1", "k^2 + k + 1", "k^2 + k + 1"),
      SequenceDef::fromText("x.kplus2", "k + 2", "k + 2"),
      SequenceDef::fromText("x.k2_2k_2", "k^2 + 2*k + 2", "k^2 + 2k + 2"),
      SequenceDef::fromText("x.4k", "4*k", "4k"),
      SequenceDef::fromText("x.k2", "k^2", "k^2"),
      SequenceDef::fromText("y.fact", "k!", "k!"),
      SequenceDef::fromText("y.invfact_shift", "1/(k+1)!", "1/(k+1)!"),
      SequenceDef::fromText("y.app6", "1/((k+2)^2*k!)", "1/((k+2)^2 k!)"),
      SequenceDef::fromText("y.app7", "1/(k*(k+1)*(k+2)!)", "1/(k(k+1)(k+2)!)"),
      SequenceDef::fromText("y.app8", "1/(4*k^4+1)", "1/(4k^4+1)"),
      SequenceDef::fromText("y.app9", "1/(4*k^4-1)", "1/(4k^4-1)"),
      SequenceDef::fromText("y.app9c", "1/(4*k^2-1)", "1/(4k^2-1)"),
  };
}

}  // namespace factineq
