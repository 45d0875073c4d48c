#include "apery/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>

#include "apery/errors.hpp"

namespace apery {

mpfr_prec_t bits_for_digits(int digits) {
  const int d = std::max(digits, 1) + kGuardDigits;
  return static_cast<mpfr_prec_t>(std::ceil(d * 3.321928094887362)) + 8;
}

void BigReal::init(int digits) {
  if (digits < 1) throw DomainError("BigReal precision must be at least 1 digit");
  digits_ = digits;
  mpfr_init2(value_, bits_for_digits(digits));
}

BigReal::BigReal() : BigReal(30) {}

BigReal::BigReal(int digits) {
  init(digits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) {
  init(digits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, int digits) {
  init(digits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, int digits) {
  init(digits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const std::string& text, int digits) {
  BigReal out(digits);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') throw DomainError("not a decimal number: '" + text + "'");
  return out;
}

BigReal::BigReal(const BigReal& other) {
  init(other.digits_);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    std::swap(value_[0], other.value_[0]);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(int digits) const {
  BigReal out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

// Narrow the accumulator to the smaller declared precision before combining.
void narrow_to(BigReal& self, const BigReal& rhs) {
  if (rhs.digits() < self.digits()) self = self.with_digits(rhs.digits());
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  narrow_to(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  narrow_to(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  narrow_to(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw DomainError("BigReal division by zero");
  narrow_to(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal BigReal::abs() const {
  BigReal out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::pow(unsigned long k) const {
  BigReal out(digits_);
  mpfr_pow_ui(out.value_, value_, k, MPFR_RNDN);
  return out;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

mpz_class BigReal::round_to_integer() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(int sig) const {
  sig = std::max(sig, 1);
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(sig), value_, MPFR_RNDN), mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 0 && e <= 40) {
    if (static_cast<long>(mant.size()) <= e) {
      out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    const long sci = e - 1;
    out += (sci < 0 ? "e-" : "e+") + std::to_string(std::labs(sci));
  }
  return sign + out;
}

BigReal pow10_neg(int k, int digits) {
  BigReal out(1L, digits);
  mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(std::abs(k)), MPFR_RNDN);
  if (k > 0) mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
  return out;
}

}  // namespace apery
