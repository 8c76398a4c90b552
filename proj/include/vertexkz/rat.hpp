#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vertexkz {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonical, so equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rat(long numerator, long denominator);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  Rat(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading sign on p, q > 0 after reduction).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rat parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Rat abs() const { return Rat(mpq_class(::abs(value_))); }
  [[nodiscard]] Rat inverse() const;
  [[nodiscard]] Rat pow(int exponent) const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class value_{0};
};

/// Raised on division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace vertexkz
