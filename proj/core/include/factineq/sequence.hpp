#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factineq/expr.hpp"
#include "factineq/numeric.hpp"

namespace factineq {

/// A named term rule k -> rational, written in the expression language.
struct SequenceDef {
  std::string id;
  Expr term;
  std::string source;
  std::string description;

  /// Parses `text` as the term. Throws ParseError, or DomainError when the
  /// term mentions n.
  static SequenceDef fromText(std::string id, std::string_view text, std::string description = {});
};

enum class Monotonicity { Nondecreasing, Nonincreasing, Constant, None };

std::string_view toString(Monotonicity m);

/// Exact value of the k-th term, k >= 1.
BigRational evalTerm(const SequenceDef& seq, std::int64_t k);

/// Sum of terms 1..n, n >= 1.
BigRational partialSum(const SequenceDef& seq, std::int64_t n);

/// Terms 1..n in order.
std::vector<BigRational> terms(const SequenceDef& seq, std::int64_t n);

/// Most specific monotonicity label of `values` under exact pairwise
/// comparison of neighbours. Fewer than two values is Constant.
Monotonicity classifyMonotonicity(std::span<const BigRational> values);
Monotonicity classifyMonotonicity(const SequenceDef& seq, std::int64_t n);

/// True when m is Nondecreasing or Constant.
bool isNondecreasing(Monotonicity m);
/// True when m is Nonincreasing or Constant.
bool isNonincreasing(Monotonicity m);

/// Incrementally extended prefix sums of one sequence. Not thread-safe; use
/// one table per sweep.
class PartialSumTable {
 public:
  explicit PartialSumTable(SequenceDef seq) : seq_(std::move(seq)) {}

  const SequenceDef& sequence() const noexcept { return seq_; }
  /// k-th term, k >= 1.
  const BigRational& term(std::int64_t k);
  /// Sum of terms 1..n; n = 0 gives the empty sum.
  const BigRational& sum(std::int64_t n);

 private:
  void extendTo(std::int64_t n);

  SequenceDef seq_;
  std::vector<BigRational> terms_;
  std::vector<BigRational> sums_{BigRational()};
};

/// Outcome of evaluating a sequence over 1..kMax at registration time.
struct SequenceValidation {
  std::int64_t kMax = 0;
  bool evaluable = true;
  std::optional<std::int64_t> errorK;
  std::string error;
  bool positive = true;
  std::optional<std::int64_t> firstNonpositiveK;
};

SequenceValidation validateSequence(const SequenceDef& seq, std::int64_t kMax);

/// The x_k and y_k sequences used by the built-in claims, in registry order.
std::vector<SequenceDef> builtinSequences();

}  // namespace factineq
