#include "apery/families.hpp"

#include <algorithm>
#include <string>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/guesser.hpp"

namespace apery {

namespace {

void check_c(long c) {
  if (c < 1) throw DomainError("family parameter c must be >= 1, got " + std::to_string(c));
}

Rational cube(long c) { return Rational(c + 1, c); }

}  // namespace

CubicFieldElement::CubicFieldElement(long c, Rational p, Rational q, Rational r) : c_(c), v_{p, q, r} {
  check_c(c);
  for (auto& x : v_) x.canonicalize();
}

bool CubicFieldElement::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x == 0; });
}

CubicFieldElement CubicFieldElement::operator+(const CubicFieldElement& o) const {
  return {c_, v_[0] + o.v_[0], v_[1] + o.v_[1], v_[2] + o.v_[2]};
}

CubicFieldElement CubicFieldElement::operator-(const CubicFieldElement& o) const {
  return {c_, v_[0] - o.v_[0], v_[1] - o.v_[1], v_[2] - o.v_[2]};
}

CubicFieldElement CubicFieldElement::operator*(const CubicFieldElement& o) const {
  if (c_ != o.c_) throw DomainError("cubic field elements over different fields");
  const Rational k = cube(c_);
  const auto& a = v_;
  const auto& b = o.v_;
  return {c_, a[0] * b[0] + k * (a[1] * b[2] + a[2] * b[1]), a[0] * b[1] + a[1] * b[0] + k * a[2] * b[2],
          a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

CubicFieldElement CubicFieldElement::inverse() const {
  if (is_zero()) throw NonInvertibleDenominator("zero has no inverse in Q(theta)");
  // Columns of multiplication by *this on the basis 1, theta, theta^2.
  const Rational k = cube(c_);
  const auto& a = v_;
  std::array<std::array<Rational, 4>, 3> m{{
      {a[0], k * a[2], k * a[1], 1},
      {a[1], a[0], k * a[2], 0},
      {a[2], a[1], a[0], 0},
  }};
  for (int col = 0; col < 3; ++col) {
    int p = col;
    while (p < 3 && m[p][col] == 0) ++p;
    if (p == 3) throw NonInvertibleDenominator("singular multiplication matrix");
    std::swap(m[p], m[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return {c_, m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

BigReal CubicFieldElement::value(int digits) const {
  const int wd = digits + 10;
  const BigReal t = nth_root(BigReal(cube(c_), wd), 3, wd);
  const BigReal out = BigReal(v_[0], wd) + BigReal(v_[1], wd) * t + BigReal(v_[2], wd) * t * t;
  return out.with_digits(digits);
}

PolyInt cubic_poly(long c) {
  check_c(c);
  const Integer s = 1 + 2 * Integer(c);
  return PolyInt(std::vector<Integer>{64, 144 * s, 108 * (3 * Integer(c) * c + 3 * c + 1), 27 * s});
}

PolyInt quadratic_poly(long c) {
  check_c(c);
  return PolyInt(std::vector<Integer>{9, 24 * Integer(c) + 12, 4});
}

CubicFieldElement root_element(long c) {
  const CubicFieldElement num = CubicFieldElement(c, -4, 4);
  const CubicFieldElement den = CubicFieldElement(c, 9 * Rational(c) + 6, -(9 * Rational(c) + 3));
  if (den.is_zero()) throw NonInvertibleDenominator("denominator of the root expression vanishes");
  return num / den;
}

bool verify_root_identity(long c) {
  const CubicFieldElement a = root_element(c);
  const PolyInt poly = cubic_poly(c);
  const auto& f = poly.coeffs();
  CubicFieldElement acc(c, 0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * a + CubicFieldElement(c, Rational(f[i]));
  return acc.is_zero();
}

namespace {

BigReal eval_real(const PolyInt& p, const BigReal& x) {
  BigReal acc(x.digits());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + BigReal(c[i], x.digits());
  return acc;
}

PolyInt derivative(const PolyInt& p) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d.push_back(p.coeffs()[i] * static_cast<long>(i));
  return PolyInt(std::move(d));
}

Integer discriminant(const PolyInt& f) {
  const auto& k = f.coeffs();
  const Integer &d = k[0], &c = k[1], &b = k[2], &a = k[3];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

BigReal real_root(long c, int digits) {
  const PolyInt f = cubic_poly(c);
  if (discriminant(f) >= 0) throw MultipleRealRoots("cubic for c = " + std::to_string(c) + " has three real roots");

  // Cauchy bound, then exact rational bisection for a coarse bracket.
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) bound = std::max(bound, Integer(abs(f.coeffs()[i])));
  Rational lo = -(Rational(bound, f.leading()) + 1), hi = -lo;
  const int slo = sign_of(eval_coeff(f, lo));
  for (int i = 0; i < 80; ++i) {
    const Rational mid = (lo + hi) / 2;
    const int s = sign_of(eval_coeff(f, mid));
    if (s == 0) return BigReal(mid, digits);
    (s == slo ? lo : hi) = mid;
  }

  const int wd = digits + 10;
  const PolyInt df = derivative(f);
  BigReal x(Rational((lo + hi) / 2), wd);
  const double stop = -(wd + kGuardDigits);
  for (int it = 0; it < 200; ++it) {
    const BigReal dx = eval_real(f, x) / eval_real(df, x);
    x -= dx;
    if (dx.is_zero() || dx.log10_abs() - x.log10_abs() < stop) break;
  }
  return x.with_digits(digits);
}

BigReal quadratic_closed_form(long c, int digits) {
  check_c(c);
  const int wd = digits + 5;
  const BigReal r = sqrt(BigReal(Integer(Integer(c) * c + c), wd), wd);
  return (BigReal(Rational(-6 * Integer(c) - 3, 2), wd) - BigReal(3L, wd) * r).with_digits(digits);
}

KappaValue kappa(long c, int digits) {
  check_c(c);
  const int wd = digits + 10;
  const BigReal a = sqrt(BigReal(c + 1, wd), wd), b = sqrt(BigReal(c, wd), wd);
  const BigReal k = BigReal::parse("0.911", wd);
  const BigReal two(2L, wd);
  const BigReal num = k + two * log(a + b, wd);
  const BigReal den = -k - two * log(a - b, wd);
  KappaValue out{(num / den).with_digits(digits), std::nullopt};
  if (c < 4) out.warning = "kappa formula is stated for c >= 4";
  return out;
}

bool proportional(const PolyInt& p, const PolyInt& q) {
  if (p.is_zero() || q.is_zero() || p.degree() != q.degree()) return false;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] * q.leading() != q.coeffs()[i] * p.leading()) return false;
  return true;
}

FamilyReport run_family(const FamilySpec& spec, std::int64_t N, int digits, const FamilyOptions& options) {
  check_c(spec.c);
  FamilyReport rep;
  rep.spec = spec;
  const bool cubic = spec.kind == FamilyKind::kCubic;
  rep.expected = cubic ? cubic_poly(spec.c) : quadratic_poly(spec.c);
  if (cubic) {
    rep.root_identity = verify_root_identity(spec.c);
    rep.kappa = kappa(spec.c, digits);
    if (rep.kappa->warning) rep.warnings.push_back(*rep.kappa->warning);
  }

  const RationalSequence terms = family_terms(spec, N);
  try {
    rep.recurrence = minimal_recurrence(terms, options.order_cap, options.degree_cap);
  } catch (const NotFound& e) {
    rep.warnings.push_back(e.what());
    return rep;
  }
  const int L = rep.recurrence->order();
  if (L < 2) {
    rep.warnings.push_back("first-order recurrence has no second solution");
    return rep;
  }
  if (L != 2) rep.warnings.push_back("order " + std::to_string(L) + " recurrence; initial vectors padded with zeros");
  std::vector<Rational> a(static_cast<std::size_t>(L), Rational(0)), b = a;
  a[0] = 1;
  b[1] = 1;
  rep.convergence = apery_limit(*rep.recurrence, RationalSequence(0, a), RationalSequence(0, b), N, 2 * digits);
  rep.mu_estimate = rep.convergence->mu_estimate;
  for (const auto& w : rep.convergence->warnings) rep.warnings.push_back(w);

  const BigReal closed = cubic ? real_root(spec.c, 2 * digits) : quadratic_closed_form(spec.c, 2 * digits);
  const BigReal& lim = rep.convergence->limit;
  const BigReal gap = (lim - closed).abs();
  rep.closed_form_agrees = gap.is_zero() || gap.log10_abs() - closed.log10_abs() < -digits;
  rep.closed_form = closed.with_digits(digits);

  if (digits >= 40) {
    rep.identified = identify_algebraic(lim, options.max_degree, digits);
    rep.polynomial_matches = rep.identified && proportional(rep.identified->polynomial, rep.expected);
    if (!rep.identified) rep.warnings.push_back("limit not identified as an algebraic number");
  } else {
    rep.warnings.push_back("identification skipped below 40 digits");
  }
  return rep;
}

}  // namespace apery
