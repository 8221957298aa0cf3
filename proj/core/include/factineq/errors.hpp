#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factineq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its mathematical domain
/// (factorial of a non-integer, negative exponent, nonpositive term, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (factorial cap, exponent cap, sweep cap) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::string expected)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }
  /// Hint describing what the parser wanted at `offset()`, may be empty.
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// deriveBound inputs whose summands do not match the x and y sequences.
class DerivationInputError : public Error {
 public:
  using Error::Error;
};

class UnknownSubjectError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Rethrows the in-flight library error with `context` appended to its
/// message, keeping its type. Call only from inside a catch block.
[[noreturn]] inline void rethrowWithContext(const std::string& context) {
  try {
    throw;
  } catch (const DivisionByZeroError& e) {
    throw DivisionByZeroError(e.what() + context);
  } catch (const DomainError& e) {
    throw DomainError(e.what() + context);
  } catch (const ResourceLimitError& e) {
    throw ResourceLimitError(e.what() + context);
  } catch (const UnboundVariableError& e) {
    throw UnboundVariableError(e.what() + context);
  } catch (const DerivationInputError& e) {
    throw DerivationInputError(e.what() + context);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.what() + context);
  }
}

}  // namespace factineq
