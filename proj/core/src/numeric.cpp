#include "factineq/numeric.hpp"

#include <cassert>
#include <cstdlib>
#include <mutex>
#include <string>

#include "factineq/errors.hpp"

namespace factineq {

BigRational::BigRational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  checkInvariant();
}

void BigRational::checkInvariant() const {
#ifndef NDEBUG
  assert(sgn(den_) > 0);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  assert(g == 1 || (sgn(num_) == 0 && den_ == 1));
#endif
}

BigRational BigRational::normalized(BigInt num, BigInt den) {
  if (sgn(den) == 0) {
    throw DivisionByZeroError("rational with zero denominator");
  }
  if (sgn(num) == 0) {
    return BigRational();
  }
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return BigRational(std::move(num), std::move(den), Reduced{});
}

BigRational ratNormalize(BigInt num, BigInt den) {
  return BigRational::normalized(std::move(num), std::move(den));
}

BigRational BigRational::reciprocal() const {
  if (isZero()) {
    throw DivisionByZeroError("reciprocal of zero");
  }
  if (sgn(num_) < 0) {
    return BigRational(-den_, -num_, Reduced{});
  }
  return BigRational(den_, num_, Reduced{});
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  if (den_ == rhs.den_) {
    *this = normalized(num_ + rhs.num_, den_);
  } else {
    *this = normalized(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  if (den_ == rhs.den_) {
    *this = normalized(num_ - rhs.num_, den_);
  } else {
    *this = normalized(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  *this = normalized(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.isZero()) {
    throw DivisionByZeroError("division by zero");
  }
  *this = normalized(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

BigRational BigRational::operator-() const {
  return BigRational(-num_, den_, Reduced{});
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = (a.den_ == b.den_) ? cmp(a.num_, b.num_) : cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigRational::toString() const {
  if (den_ == 1) {
    return num_.get_str();
  }
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// p * 10^shift / q for a possibly negative shift.
void scaleByPow10(BigInt& p, BigInt& q, long shift) {
  if (shift >= 0) {
    p *= pow10(static_cast<unsigned long>(shift));
  } else {
    q *= pow10(static_cast<unsigned long>(-shift));
  }
}

BigInt roundHalfEven(const BigInt& p, const BigInt& q) {
  BigInt quot;
  BigInt rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  int c = cmp(BigInt(rem * 2), q);
  if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) {
    ++quot;
  }
  return quot;
}

}  // namespace

std::string toDecimal(const BigRational& value, int significantDigits) {
  if (significantDigits < 1) {
    significantDigits = 1;
  }
  if (value.isZero()) {
    return "0";
  }
  BigInt p = abs(value.num());
  const BigInt& q = value.den();

  // Find e with 10^e <= p/q < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  auto atLeastPow = [&](long exp) {
    BigInt lhs = p;
    BigInt rhs = q;
    scaleByPow10(rhs, lhs, exp);
    return cmp(lhs, rhs) >= 0;
  };
  while (!atLeastPow(e)) --e;
  while (atLeastPow(e + 1)) ++e;

  BigInt sp = p;
  BigInt sq = q;
  scaleByPow10(sp, sq, significantDigits - 1 - e);
  BigInt mantissa = roundHalfEven(sp, sq);
  if (mantissa == pow10(static_cast<unsigned long>(significantDigits))) {
    mantissa /= 10;
    ++e;
  }
  std::string digits = mantissa.get_str();

  std::string out = value.sign() < 0 ? "-" : "";
  if (e >= -4 && e < 12) {
    if (e >= 0) {
      auto intLen = static_cast<std::size_t>(e + 1);
      if (intLen >= digits.size()) {
        out += digits + std::string(intLen - digits.size(), '0');
      } else {
        out += digits.substr(0, intLen) + "." + digits.substr(intLen);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += "." + digits.substr(1);
    }
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  }
  return out;
}

FactorialCache::FactorialCache(std::uint64_t cap) : cap_(cap) {
  table_.emplace_back(1);
}

std::uint64_t FactorialCache::highWaterMark() const {
  std::shared_lock lock(mutex_);
  return table_.size() - 1;
}

const BigInt& FactorialCache::get(std::uint64_t m) {
  if (m > cap_) {
    throw ResourceLimitError("factorial of " + std::to_string(m) + " exceeds the factorial cap " +
                             std::to_string(cap_));
  }
  {
    std::shared_lock lock(mutex_);
    if (m < table_.size()) {
      return table_[m];
    }
  }
  std::unique_lock lock(mutex_);
  while (table_.size() <= m) {
    BigInt next = table_.back() * static_cast<unsigned long>(table_.size());
    table_.push_back(std::move(next));
  }
  return table_[m];
}

std::uint64_t parseFactorialCap(const char* text) {
  if (text == nullptr || *text == '\0') {
    return FactorialCache::kDefaultCap;
  }
  char* end = nullptr;
  unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0 || text[0] == '-') {
    return FactorialCache::kDefaultCap;
  }
  return v;
}

FactorialCache& FactorialCache::shared() {
  static FactorialCache cache(parseFactorialCap(std::getenv("FACTINEQ_FACTORIAL_CAP")));
  return cache;
}

const BigInt& factorial(std::uint64_t m) {
  return FactorialCache::shared().get(m);
}

}  // namespace factineq
