#include "apery/identifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apery/constants.hpp"
#include "apery/errors.hpp"

namespace apery {

namespace {

using Matrix = std::vector<std::vector<BigReal>>;
using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer nearest(const BigReal& v) { return v.round_to_integer(); }

void normalize_relation(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  const auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
  if (first != v.end() && *first < 0)
    for (auto& c : v) c = -c;
}

BigReal dot(const std::vector<BigReal>& x, const std::vector<Integer>& m, int digits) {
  BigReal s(digits);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (m[i] != 0) s += BigReal(m[i], digits) * x[i];
  return s;
}

class Pslq {
 public:
  Pslq(const std::vector<BigReal>& x, int digits) : n_(x.size()), P_(digits) {
    for (const auto& v : x) x_.push_back(v.with_digits(P_));
    A_ = identity(n_);
    B_ = identity(n_);
    gamma_ = sqrt(BigReal(Rational(4, 3), P_), P_);
  }

  void init() {
    std::vector<BigReal> s(n_, BigReal(P_));
    BigReal acc(P_);
    for (std::size_t k = n_; k-- > 0;) {
      acc += x_[k] * x_[k];
      s[k] = sqrt(acc, P_);
    }
    const BigReal s0 = s[0];
    for (std::size_t k = 0; k < n_; ++k) {
      y_.push_back(x_[k] / s0);
      s[k] /= s0;
    }
    H_.assign(n_, std::vector<BigReal>(n_ - 1, BigReal(P_)));
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      H_[j][j] = s[j + 1] / s[j];
      for (std::size_t i = j + 1; i < n_; ++i) H_[i][j] = -(y_[i] * y_[j]) / (s[j] * s[j + 1]);
    }
    reduce();
  }

  // Hermite reduction of H, applied to y, A and B.
  void reduce() {
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t j = i; j-- > 0;) {
        if (H_[j][j].is_zero()) continue;
        const Integer t = nearest(H_[i][j] / H_[j][j]);
        if (t == 0) continue;
        const BigReal tb(t, P_);
        y_[j] += tb * y_[i];
        for (std::size_t k = 0; k <= j; ++k) H_[i][k] -= tb * H_[j][k];
        for (std::size_t k = 0; k < n_; ++k) {
          A_[i][k] -= t * A_[j][k];
          B_[k][j] += t * B_[k][i];
        }
      }
    }
  }

  void step() {
    std::size_t m = 0;
    BigReal best(P_), g = gamma_;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      const BigReal v = g * H_[i][i].abs();
      if (i == 0 || v > best) {
        best = v;
        m = i;
      }
      g *= gamma_;
    }
    std::swap(y_[m], y_[m + 1]);
    std::swap(A_[m], A_[m + 1]);
    std::swap(H_[m], H_[m + 1]);
    for (std::size_t k = 0; k < n_; ++k) std::swap(B_[k][m], B_[k][m + 1]);
    if (m + 2 < n_) {
      const BigReal a = H_[m][m], b = H_[m][m + 1];
      const BigReal t0 = sqrt(a * a + b * b, P_);
      const BigReal t1 = a / t0, t2 = b / t0;
      for (std::size_t i = m; i < n_; ++i) {
        const BigReal t3 = H_[i][m], t4 = H_[i][m + 1];
        H_[i][m] = t1 * t3 + t2 * t4;
        H_[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    reduce();
  }

  // Column of B with the smallest |y_j|.
  std::size_t smallest_y() const {
    std::size_t j = 0;
    for (std::size_t k = 1; k < n_; ++k)
      if (y_[k].abs() < y_[j].abs()) j = k;
    return j;
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(n_);
    for (std::size_t k = 0; k < n_; ++k) c[k] = B_[k][j];
    return c;
  }

  BigReal norm_bound() const {
    BigReal mx(P_);
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      BigReal a = H_[j][j].abs();
      if (a > mx) mx = std::move(a);
    }
    if (mx.is_zero()) return BigReal(P_);
    return BigReal(1L, P_) / mx;
  }

  double max_entry_digits() const {
    double mx = 0.0;
    for (const auto* M : {&A_, &B_})
      for (const auto& row : *M)
        for (const auto& e : row)
          if (e != 0) mx = std::max(mx, static_cast<double>(mpz_sizeinbase(e.get_mpz_t(), 10)));
    return mx;
  }

  const std::vector<BigReal>& x() const { return x_; }

 private:
  std::size_t n_;
  int P_;
  std::vector<BigReal> x_, y_;
  Matrix H_;
  IntMatrix A_, B_;
  BigReal gamma_;
};

}  // namespace

PslqResult pslq(const std::vector<BigReal>& x, int max_coeff_digits, int digits) {
  if (x.size() < 2) throw DomainError("pslq needs at least two entries");
  if (digits < 1) throw DomainError("pslq needs digits >= 1");
  for (const auto& v : x)
    if (v.digits() < digits) throw DomainError("pslq input carries fewer digits than requested");
  const int accept_exp = static_cast<int>(std::ceil(0.8 * digits));
  const BigReal tol = pow10_neg(accept_exp, digits);

  PslqResult out;
  out.norm_bound = BigReal(digits);
  auto accept = [&](std::vector<Integer> rel, const std::vector<BigReal>& xs) {
    normalize_relation(rel);
    IntegerRelation r;
    r.residual = dot(xs, rel, digits).abs();
    r.coeffs = std::move(rel);
    r.input_precision = digits;
    out.relation = std::move(r);
  };

  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].abs() < tol) {
      std::vector<Integer> e(x.size(), Integer(0));
      e[i] = 1;
      accept(std::move(e), x);
      return out;
    }
  }

  Pslq run(x, digits);
  run.init();
  const BigReal cap = BigReal(1L, digits) / pow10_neg(max_coeff_digits, digits);
  const int max_iter = 400 * static_cast<int>(x.size()) * std::max(digits, 10);
  for (int it = 0; it < max_iter; ++it) {
    out.iterations = it;
    const std::vector<Integer> cand = run.column(run.smallest_y());
    const BigReal res = dot(run.x(), cand, digits).abs();
    if (res < tol) {
      out.norm_bound = run.norm_bound();
      accept(cand, run.x());
      return out;
    }
    out.norm_bound = run.norm_bound();
    if (out.norm_bound > cap) return out;
    if (run.max_entry_digits() > digits - 5)
      throw PrecisionExhausted("pslq basis entries exceed the working precision of " + std::to_string(digits) +
                               " digits");
    run.step();
  }
  throw PrecisionExhausted("pslq did not terminate within the iteration budget");
}

namespace {

BigReal horner(const PolyInt& p, const BigReal& x) {
  BigReal acc(x.digits());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + BigReal(c[i], x.digits());
  return acc;
}

bool confirmed(const BigReal& residual, int digits) {
  return residual.is_zero() || residual.log10_abs() < -1.6 * digits;
}

}  // namespace

std::optional<AlgebraicCandidate> identify_algebraic(const BigReal& L, int max_degree, int digits) {
  if (digits < 40) throw DomainError("identify_algebraic needs digits >= 40");
  if (max_degree < 1) throw DomainError("identify_algebraic needs max_degree >= 1");
  if (L.digits() < digits) throw DomainError("value carries fewer digits than requested");
  const bool can_confirm = L.digits() >= 2 * digits;
  const BigReal Lw = L.with_digits(digits);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<BigReal> powers{BigReal(1L, digits)};
    for (int i = 1; i <= d; ++i) powers.push_back(powers.back() * Lw);
    const int coeff_digits = std::max(2, static_cast<int>(0.8 * digits / (d + 1)));
    const PslqResult res = pslq(powers, coeff_digits, digits);
    if (!res.relation) continue;
    std::vector<Integer> c = res.relation->coeffs;
    PolyInt poly(std::move(c));
    if (poly.degree() < 1) continue;
    if (poly.leading() < 0) poly = -poly;
    if (!can_confirm) return std::nullopt;
    const BigReal check = horner(poly, L.with_digits(2 * digits)).abs();
    if (!confirmed(check, digits)) continue;
    return AlgebraicCandidate{poly, poly.degree(), 2 * digits, check};
  }
  return std::nullopt;
}

std::vector<NamedConstant> default_basis(int digits) {
  return {{"zeta2", zeta2(digits)}, {"zeta3", zeta3(digits)}, {"pi", pi(digits)}};
}

std::optional<LinearIdentification> identify_linear(const BigReal& L, const std::vector<NamedConstant>& basis,
                                                    int digits) {
  if (L.digits() < digits) throw DomainError("value carries fewer digits than requested");
  const bool can_confirm = L.digits() >= 2 * digits;
  std::optional<LinearIdentification> best;
  Integer best_height;
  for (const auto& b : basis) {
    if (b.value.digits() < digits) throw DomainError("basis constant " + b.name + " carries too few digits");
    const std::vector<BigReal> x{L.with_digits(digits), BigReal(1L, digits), b.value.with_digits(digits)};
    const PslqResult res = pslq(x, std::max(2, static_cast<int>(0.8 * digits / 3)), digits);
    if (!res.relation || res.relation->coeffs[0] == 0 || res.relation->coeffs[2] == 0) continue;
    if (!can_confirm || b.value.digits() < 2 * digits) continue;
    const auto& m = res.relation->coeffs;
    const std::vector<BigReal> x2{L.with_digits(2 * digits), BigReal(1L, 2 * digits), b.value.with_digits(2 * digits)};
    if (!confirmed(dot(x2, m, 2 * digits).abs(), digits)) continue;
    Integer height = 0;
    for (const auto& c : m) height = std::max(height, Integer(abs(c)));
    if (best && height >= best_height) continue;
    LinearIdentification id;
    id.name = b.name;
    id.coefficient = Rational(-m[2], m[0]);
    id.coefficient.canonicalize();
    id.constant = Rational(-m[1], m[0]);
    id.constant.canonicalize();
    id.relation = *res.relation;
    id.confirmed_at = 2 * digits;
    best = std::move(id);
    best_height = height;
  }
  return best;
}

}  // namespace apery
