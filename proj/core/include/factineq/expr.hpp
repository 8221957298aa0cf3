#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "factineq/numeric.hpp"

namespace factineq {

enum class Variable { K, N };

enum class ExprKind { IntLiteral, Var, Neg, Add, Sub, Mul, Div, Pow, Factorial };

/// Immutable expression tree over the variables k and n.
///
/// Nodes are shared, so copying an Expr is cheap and subtrees can be reused
/// freely. Equality is structural.
class Expr {
 public:
  /// Nonnegative integer literal. Throws DomainError for negative values;
  /// negation is expressed with neg().
  static Expr literal(BigInt value);
  static Expr var(Variable v);
  static Expr neg(Expr operand);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr div(Expr lhs, Expr rhs);
  static Expr pow(Expr base, Expr exponent);
  static Expr factorial(Expr operand);

  ExprKind kind() const noexcept;
  /// Literal value; only meaningful for IntLiteral.
  const BigInt& value() const;
  /// Only meaningful for Var.
  Variable variable() const;
  /// Left operand of a binary node, or the sole operand of Neg and Factorial.
  const Expr& lhs() const;
  /// Right operand of a binary node.
  const Expr& rhs() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Values for the free variables during evaluation.
struct Bindings {
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;

  static Bindings withK(std::int64_t value) { return {value, std::nullopt}; }
  static Bindings withN(std::int64_t value) { return {std::nullopt, value}; }
};

/// Parses the expression grammar:
///
///   expr    := term (('+'|'-') term)* ;
///   term    := unary (('*'|'/') unary)* ;
///   unary   := '-' unary | power ;
///   power   := postfix ('^' unary)? ;
///   postfix := atom '!'* ;
///   atom    := INT | 'k' | 'n' | '(' expr ')' ;
///
/// Throws ParseError carrying the byte offset of the problem.
Expr parse(std::string_view text);

/// Canonical text that parse() maps back to a structurally equal tree.
std::string prettyPrint(const Expr& expr);

/// Exact value of `expr`. Errors name the offending subexpression:
/// DivisionByZeroError, DomainError (factorial of a non-integer or negative
/// value, negative or fractional exponent), UnboundVariableError, and
/// ResourceLimitError for factorials past the cap or huge exponents.
BigRational evalExpr(const Expr& expr, const Bindings& bindings);

/// Variables referenced anywhere in the tree.
std::set<Variable> freeVariables(const Expr& expr);

char variableName(Variable v);

}  // namespace factineq
