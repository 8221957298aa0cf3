#include "factineq/expr.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "factineq/errors.hpp"

namespace factineq {

struct Expr::Node {
  ExprKind kind;
  BigInt value;
  Variable var = Variable::K;
  std::optional<Expr> lhs;
  std::optional<Expr> rhs;
};

namespace {

constexpr unsigned long kMaxExponent = 1UL << 16;
constexpr int kMaxNesting = 512;

}  // namespace

Expr Expr::literal(BigInt value) {
  if (sgn(value) < 0) {
    throw DomainError("integer literal must be nonnegative: " + value.get_str());
  }
  return Expr(std::make_shared<const Node>(Node{ExprKind::IntLiteral, std::move(value), Variable::K, {}, {}}));
}

Expr Expr::var(Variable v) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Var, BigInt(0), v, {}, {}}));
}

Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Neg, BigInt(0), Variable::K, std::move(operand), {}}));
}

Expr Expr::factorial(Expr operand) {
  return Expr(
      std::make_shared<const Node>(Node{ExprKind::Factorial, BigInt(0), Variable::K, std::move(operand), {}}));
}

#define FACTINEQ_BINARY(name, kindValue)                                                         \
  Expr Expr::name(Expr lhs, Expr rhs) {                                                          \
    return Expr(std::make_shared<const Node>(                                                    \
        Node{ExprKind::kindValue, BigInt(0), Variable::K, std::move(lhs), std::move(rhs)})); \
  }
FACTINEQ_BINARY(add, Add)
FACTINEQ_BINARY(sub, Sub)
FACTINEQ_BINARY(mul, Mul)
FACTINEQ_BINARY(div, Div)
FACTINEQ_BINARY(pow, Pow)
#undef FACTINEQ_BINARY

ExprKind Expr::kind() const noexcept { return node_->kind; }
const BigInt& Expr::value() const { return node_->value; }
Variable Expr::variable() const { return node_->var; }
const Expr& Expr::lhs() const { return *node_->lhs; }
const Expr& Expr::rhs() const { return *node_->rhs; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::IntLiteral:
      return a.value() == b.value();
    case ExprKind::Var:
      return a.variable() == b.variable();
    case ExprKind::Neg:
    case ExprKind::Factorial:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

char variableName(Variable v) { return v == Variable::K ? 'k' : 'n'; }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parseAll() {
    Expr e = parseExpr();
    skipSpace();
    if (pos_ < text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": " + what;
    if (!expected.empty()) msg += ", expected " + expected;
    throw ParseError(msg, pos_, expected);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("expression nested too deeply", "");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Expr parseExpr() {
    DepthGuard guard(*this);
    Expr lhs = parseTerm();
    while (true) {
      if (accept('+')) {
        lhs = Expr::add(std::move(lhs), parseTerm());
      } else if (accept('-')) {
        lhs = Expr::sub(std::move(lhs), parseTerm());
      } else {
        return lhs;
      }
    }
  }

  Expr parseTerm() {
    Expr lhs = parseUnary();
    while (true) {
      if (accept('*')) {
        lhs = Expr::mul(std::move(lhs), parseUnary());
      } else if (accept('/')) {
        lhs = Expr::div(std::move(lhs), parseUnary());
      } else {
        return lhs;
      }
    }
  }

  Expr parseUnary() {
    DepthGuard guard(*this);
    if (accept('-')) {
      return Expr::neg(parseUnary());
    }
    return parsePower();
  }

  Expr parsePower() {
    Expr base = parsePostfix();
    if (accept('^')) {
      return Expr::pow(std::move(base), parseUnary());
    }
    return base;
  }

  Expr parsePostfix() {
    Expr e = parseAtom();
    while (accept('!')) {
      e = Expr::factorial(std::move(e));
    }
    return e;
  }

  Expr parseAtom() {
    skipSpace();
    if (pos_ >= text_.size()) {
      fail("unexpected end of input", "integer, 'k', 'n' or '('");
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::literal(BigInt(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "k") return Expr::var(Variable::K);
      if (ident == "n") return Expr::var(Variable::N);
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'", "'k' or 'n'");
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parseExpr();
      if (!accept(')')) {
        fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input",
             "\")\"");
      }
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'", "integer, 'k', 'n' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parseAll(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength of each node as it appears in the grammar. A child is
// parenthesized when its level is below what the parent's slot requires.
int level(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    case ExprKind::Factorial:
      return 5;
    default:
      return 6;
  }
}

void print(const Expr& e, int minLevel, std::string& out) {
  bool parens = level(e.kind()) < minLevel;
  if (parens) out += '(';
  switch (e.kind()) {
    case ExprKind::IntLiteral:
      out += e.value().get_str();
      break;
    case ExprKind::Var:
      out += variableName(e.variable());
      break;
    case ExprKind::Neg:
      out += '-';
      print(e.lhs(), 3, out);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print(e.lhs(), 1, out);
      out += e.kind() == ExprKind::Add ? " + " : " - ";
      print(e.rhs(), 2, out);
      break;
    case ExprKind::Mul:
    case ExprKind::Div:
      print(e.lhs(), 2, out);
      out += e.kind() == ExprKind::Mul ? '*' : '/';
      print(e.rhs(), 3, out);
      break;
    case ExprKind::Pow:
      print(e.lhs(), 5, out);
      out += '^';
      print(e.rhs(), 3, out);
      break;
    case ExprKind::Factorial:
      print(e.lhs(), 5, out);
      out += '!';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string prettyPrint(const Expr& expr) {
  std::string out;
  print(expr, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

std::string quoted(const Expr& e) { return "`" + prettyPrint(e) + "`"; }

BigRational eval(const Expr& e, const Bindings& b) {
  switch (e.kind()) {
    case ExprKind::IntLiteral:
      return BigRational(e.value());
    case ExprKind::Var: {
      const auto& slot = e.variable() == Variable::K ? b.k : b.n;
      if (!slot) {
        throw UnboundVariableError(std::string("unbound variable '") + variableName(e.variable()) + "'");
      }
      return BigRational(static_cast<long>(*slot));
    }
    case ExprKind::Neg:
      return -eval(e.lhs(), b);
    case ExprKind::Add:
      return eval(e.lhs(), b) + eval(e.rhs(), b);
    case ExprKind::Sub:
      return eval(e.lhs(), b) - eval(e.rhs(), b);
    case ExprKind::Mul:
      return eval(e.lhs(), b) * eval(e.rhs(), b);
    case ExprKind::Div: {
      BigRational num = eval(e.lhs(), b);
      BigRational den = eval(e.rhs(), b);
      if (den.isZero()) {
        throw DivisionByZeroError("division by zero in " + quoted(e));
      }
      return num / den;
    }
    case ExprKind::Pow: {
      BigRational base = eval(e.lhs(), b);
      BigRational exponent = eval(e.rhs(), b);
      if (!exponent.isInteger() || exponent.sign() < 0) {
        throw DomainError("exponent " + exponent.toString() + " is not a nonnegative integer in " + quoted(e));
      }
      if (cmp(exponent.num(), kMaxExponent) > 0) {
        throw ResourceLimitError("exponent " + exponent.toString() + " exceeds the exponent cap in " + quoted(e));
      }
      unsigned long p = exponent.num().get_ui();
      BigInt num;
      BigInt den;
      mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), p);
      mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), p);
      return BigRational::normalized(std::move(num), std::move(den));
    }
    case ExprKind::Factorial: {
      BigRational arg = eval(e.lhs(), b);
      if (!arg.isInteger()) {
        throw DomainError("factorial of non-integer " + arg.toString() + " in " + quoted(e));
      }
      if (arg.sign() < 0) {
        throw DomainError("factorial of negative value " + arg.toString() + " in " + quoted(e));
      }
      if (!arg.num().fits_ulong_p()) {
        throw ResourceLimitError("factorial argument " + arg.toString() + " exceeds the factorial cap in " +
                                 quoted(e));
      }
      try {
        return BigRational(factineq::factorial(arg.num().get_ui()));
      } catch (const ResourceLimitError& err) {
        throw ResourceLimitError(std::string(err.what()) + " in " + quoted(e));
      }
    }
  }
  throw DomainError("unknown expression node");
}

void collect(const Expr& e, std::set<Variable>& vars) {
  switch (e.kind()) {
    case ExprKind::IntLiteral:
      return;
    case ExprKind::Var:
      vars.insert(e.variable());
      return;
    case ExprKind::Neg:
    case ExprKind::Factorial:
      collect(e.lhs(), vars);
      return;
    default:
      collect(e.lhs(), vars);
      collect(e.rhs(), vars);
  }
}

}  // namespace

BigRational evalExpr(const Expr& expr, const Bindings& bindings) { return eval(expr, bindings); }

std::set<Variable> freeVariables(const Expr& expr) {
  std::set<Variable> vars;
  collect(expr, vars);
  return vars;
}

}  // namespace factineq
