#include "factineq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "factineq/errors.hpp"

namespace factineq {

void validateRange(std::int64_t nMin, std::int64_t nMax) {
  if (nMin < 1) {
    throw UsageError("range must start at n >= 1, got n-min " + std::to_string(nMin));
  }
  if (nMax < 1) {
    throw UsageError("n-max must be at least 1; ranges start at n = 1");
  }
  if (nMax < nMin) {
    throw UsageError("n-max " + std::to_string(nMax) + " is below n-min " + std::to_string(nMin));
  }
}

std::vector<Subject> listSubjects(const Catalog& catalog) {
  std::vector<Subject> out;
  for (const auto& identity : catalog.identities()) {
    out.push_back({identity.id, SubjectKind::Identity, identity.id});
    if (identity.witness) {
      out.push_back({identity.id + "/telescope", SubjectKind::Telescope, identity.id});
    }
  }
  for (const auto& claim : catalog.claims()) {
    out.push_back({claim.id, SubjectKind::Claim, claim.id});
  }
  std::sort(out.begin(), out.end(), [](const Subject& a, const Subject& b) { return a.id < b.id; });
  return out;
}

Subject findSubject(const Catalog& catalog, std::string_view id) {
  for (auto& subject : listSubjects(catalog)) {
    if (subject.id == id) return subject;
  }
  throw UnknownSubjectError("unknown subject '" + std::string(id) + "'");
}

namespace {

RangeReport skeleton(const Catalog& catalog, const Subject& subject, const SweepOptions& options) {
  RangeReport report;
  report.subjectId = subject.id;
  report.subjectKind = subject.kind;
  report.nMin = options.nMin;
  report.nMax = options.nMax;
  if (subject.kind == SubjectKind::Claim) {
    const auto& claim = catalog.claim(subject.target);
    report.variant = std::string(toString(claim.variant));
    report.statement = claim.statement();
    report.correctedSibling = claim.correctedSibling;
  } else {
    const auto& identity = catalog.identity(subject.target);
    report.variant = std::string(toString(identity.provenance));
    report.statement = identity.statement();
    report.correctedSibling = identity.correctedSibling;
  }
  return report;
}

}  // namespace

RangeReport runSubject(const Catalog& catalog, const Subject& subject, const SweepOptions& options) {
  auto start = std::chrono::steady_clock::now();
  RangeReport report;
  try {
    switch (subject.kind) {
      case SubjectKind::Identity:
        report = verifyIdentity(catalog.identity(subject.target), options.nMax, options.nMin);
        break;
      case SubjectKind::Telescope:
        report = telescopeReport(catalog.identity(subject.target), options.nMax, options.nMin);
        break;
      case SubjectKind::Claim: {
        const auto& claim = catalog.claim(subject.target);
        report = verifyClaim(claim, options.nMin, options.nMax);
        if (claim.derivation) {
          report.derivation =
              checkDerivation(catalog, claim, std::min(options.derivationLimit, options.nMax));
        }
        break;
      }
    }
  } catch (const Error& e) {
    report = skeleton(catalog, subject, options);
    report.fail(e.what());
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  report.runtimeMillis = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return report;
}

std::vector<RangeReport> runSubjects(const Catalog& catalog, const std::vector<Subject>& subjects,
                                     const SweepOptions& options) {
  validateRange(options.nMin, options.nMax);
  std::vector<RangeReport> reports(subjects.size());
  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(subjects.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < subjects.size(); i = next++) {
      reports[i] = runSubject(catalog, subjects[i], options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return reports;
}

std::vector<RangeReport> runAll(const Catalog& catalog, const SweepOptions& options) {
  return runSubjects(catalog, listSubjects(catalog), options);
}

std::optional<Counterexample> searchCounterexample(const Catalog& catalog, std::string_view subjectId,
                                                   std::int64_t nMax) {
  Subject subject = findSubject(catalog, subjectId);
  validateRange(1, nMax);
  switch (subject.kind) {
    case SubjectKind::Claim: {
      const auto& claim = catalog.claim(subject.target);
      PartialSumTable sums(claim.summand);
      for (std::int64_t n = 1; n <= nMax; ++n) {
        Verdict v = evaluateClaim(claim, n, sums.sum(n));
        if (!v.holds) return Counterexample{n, v.lhs, v.rhs};
      }
      return std::nullopt;
    }
    case SubjectKind::Identity: {
      const auto& identity = catalog.identity(subject.target);
      PartialSumTable sums(identity.summand);
      for (std::int64_t n = 1; n <= nMax; ++n) {
        BigRational closed = closedFormAt(identity, n);
        if (sums.sum(n) != closed) return Counterexample{n, sums.sum(n), closed};
      }
      return std::nullopt;
    }
    case SubjectKind::Telescope: {
      const auto& identity = catalog.identity(subject.target);
      const auto& w = *identity.witness;
      for (std::int64_t k = 1; k <= nMax; ++k) {
        BigRational summand = evalTerm(identity.summand, k);
        BigRational witness =
            w.c + evalExpr(w.g, Bindings::withK(k + 1)) - evalExpr(w.g, Bindings::withK(k));
        if (summand != witness) return Counterexample{k, summand, witness};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

int exitCodeFor(const std::vector<RangeReport>& reports, bool strictPrinted) {
  for (const auto& r : reports) {
    if (r.error) return 1;
    if (!r.counterexamples.empty() && (strictPrinted || !r.isKnownErratum())) return 1;
  }
  return 0;
}

}  // namespace factineq
