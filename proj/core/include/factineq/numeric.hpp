#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>

#include <gmpxx.h>

namespace factineq {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Every constructor and arithmetic operator returns a normalized value, so
/// two rationals are equal exactly when their numerators and denominators are.
/// Zero is stored as 0/1.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Reduces num/den. Throws DivisionByZeroError when den is zero.
  static BigRational normalized(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool isZero() const noexcept { return sgn(num_) == 0; }
  bool isInteger() const noexcept { return den_ == 1; }

  BigRational reciprocal() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  /// "num/den", or just "num" for integers.
  std::string toString() const;

 private:
  struct Reduced {};
  BigRational(BigInt num, BigInt den, Reduced);
  void checkInvariant() const;

  BigInt num_;
  BigInt den_;
};

BigRational ratNormalize(BigInt num, BigInt den);

/// Approximate decimal rendering with `significantDigits` significant digits,
/// rounded half-to-even. Fixed notation for magnitudes in [1e-4, 1e12),
/// scientific ("1.23e-45") otherwise. For display only.
std::string toDecimal(const BigRational& value, int significantDigits = 12);

/// Append-only table of m! guarded by a reader/writer lock. Entries are stored
/// in a deque so references handed out stay valid while the table grows.
class FactorialCache {
 public:
  static constexpr std::uint64_t kDefaultCap = 10'000;

  explicit FactorialCache(std::uint64_t cap = kDefaultCap);

  FactorialCache(const FactorialCache&) = delete;
  FactorialCache& operator=(const FactorialCache&) = delete;

  /// m!, exact. Throws ResourceLimitError when m exceeds the cap.
  const BigInt& get(std::uint64_t m);

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t highWaterMark() const;

  /// Process-wide cache. Its cap comes from FACTINEQ_FACTORIAL_CAP when that
  /// variable holds a positive integer, otherwise kDefaultCap.
  static FactorialCache& shared();

 private:
  std::uint64_t cap_;
  mutable std::shared_mutex mutex_;
  std::deque<BigInt> table_;
};

/// m! from the shared cache.
const BigInt& factorial(std::uint64_t m);

/// Reads a factorial cap from the environment value `text`; returns kDefaultCap
/// when text is null, empty, or not a positive integer.
std::uint64_t parseFactorialCap(const char* text);

}  // namespace factineq
