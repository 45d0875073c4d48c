#pragma once

// Fixed-precision real numbers with an explicit decimal precision tag.
//
// A BigReal declared at `digits` significant decimal digits stores a binary
// mantissa wide enough for digits + kGuardDigits, so that every result is
// correct to within one unit in the last declared place. Results of binary
// operations carry the smaller of the two operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace apery {

inline constexpr int kGuardDigits = 20;

class BigReal {
 public:
  /// Zero at 30 digits.
  BigReal();
  /// Zero at `digits` precision.
  explicit BigReal(int digits);
  BigReal(long value, int digits);
  BigReal(const mpz_class& value, int digits);
  BigReal(const mpq_class& value, int digits);
  /// Decimal literal such as "-1.25e-3"; throws DomainError on bad syntax.
  static BigReal parse(const std::string& text, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const noexcept { return digits_; }
  /// Same value, re-declared at another precision (rounded if narrower).
  BigReal with_digits(int digits) const;

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  BigReal abs() const;
  BigReal pow(unsigned long k) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x| as a double; -inf for zero. Safe for magnitudes outside double range.
  double log10_abs() const;
  /// Nearest integer.
  mpz_class round_to_integer() const;

  /// `sig` significant digits, rounded to nearest. Fixed notation for
  /// moderate exponents, otherwise d.ddd...e[+-]N.
  std::string to_string(int sig) const;
  /// to_string at the declared precision.
  std::string to_string() const { return to_string(digits_); }

 private:
  void init(int digits);
  mpfr_t value_;
  int digits_ = 0;
};

/// Binary precision used for a declared decimal precision (guard digits included).
mpfr_prec_t bits_for_digits(int digits);

/// 10^(-k) at the given precision.
BigReal pow10_neg(int k, int digits);

}  // namespace apery
