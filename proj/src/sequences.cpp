#include "apery/sequences.hpp"

#include <cstdlib>
#include <string>

#include "apery/errors.hpp"

namespace apery {

std::vector<Integer> binomial_row(std::int64_t n) {
  if (n < 0) throw DomainError("binomial_row needs n >= 0");
  std::vector<Integer> row(static_cast<std::size_t>(n + 1));
  row[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    row[static_cast<std::size_t>(k + 1)] = row[static_cast<std::size_t>(k)] * static_cast<long>(n - k);
    mpz_divexact_ui(row[static_cast<std::size_t>(k + 1)].get_mpz_t(),
                    row[static_cast<std::size_t>(k + 1)].get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return row;
}

Integer binomial_power_sum(int d, std::int64_t n) {
  if (d < 1) throw DomainError("binomial_power_sum needs d >= 1");
  Integer sum = 0, p;
  for (const auto& c : binomial_row(n)) {
    mpz_pow_ui(p.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(d));
    sum += p;
  }
  return sum;
}

RationalSequence binomial_power_sums(int d, std::int64_t N) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  for (std::int64_t n = 0; n <= N; ++n) out.emplace_back(binomial_power_sum(d, n));
  return RationalSequence(0, std::move(out));
}

namespace {

void check_triangle(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("potential needs 0 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

// 2 sum_{m=1}^{n} (-1)^(m-1) / m^2
Rational alternating_head(std::int64_t n) {
  Rational s = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    Rational t(1, Integer(static_cast<long>(m)) * m);
    t.canonicalize();
    if (m % 2 == 1) s += t;
    else s -= t;
  }
  return 2 * s;
}

}  // namespace

std::vector<Rational> potential_row(std::int64_t n) {
  check_triangle(n, 0);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(n + 1));
  row.push_back(alternating_head(n));
  // C(n,m) C(n+m,m) updated multiplicatively: ratio (n-m+1)(n+m) / m^2.
  Integer bb = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    bb *= static_cast<long>(n - m + 1);
    bb *= static_cast<long>(n + m);
    mpz_divexact_ui(bb.get_mpz_t(), bb.get_mpz_t(), static_cast<unsigned long>(m * m));
    Rational t(1, bb * static_cast<long>(m) * static_cast<long>(m));
    t.canonicalize();
    Rational next = row.back();
    if ((n + m - 1) % 2 == 0) next += t;
    else next -= t;
    row.push_back(std::move(next));
  }
  return row;
}

Rational potential(std::int64_t n, std::int64_t k) {
  check_triangle(n, k);
  return potential_row(n)[static_cast<std::size_t>(k)];
}

PotentialTable::PotentialTable(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("PotentialTable needs n_max >= 0");
  rows_.reserve(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) rows_.push_back(potential_row(n));
}

const std::vector<Rational>& PotentialTable::row(std::int64_t n) const {
  if (n < 0 || n > n_max_) throw OutOfRange("potential table row " + std::to_string(n) + " not built");
  return rows_[static_cast<std::size_t>(n)];
}

const Rational& PotentialTable::at(std::int64_t n, std::int64_t k) const {
  check_triangle(n, k);
  return row(n)[static_cast<std::size_t>(k)];
}

WzComponents wz_form_components(std::int64_t n, std::int64_t k) {
  if (k < 0 || k >= n) throw DomainError("wz_form_components needs 0 <= k < n");
  Integer kf, nkf, denf;
  mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(nkf.get_mpz_t(), static_cast<unsigned long>(n - k - 1));
  mpz_fac_ui(denf.get_mpz_t(), static_cast<unsigned long>(n + k + 1));
  Rational w(kf * kf * nkf, denf * static_cast<long>(n + 1));
  w.canonicalize();
  if ((n + k) % 2 != 0) w = -w;
  return {w * static_cast<long>(n + 1), w * static_cast<long>(2 * (n - k))};
}

namespace {

Rational weighted_sum_row(int d, std::int64_t n, const std::vector<Rational>& row) {
  if (d < 1) throw DomainError("weighted_sum needs d >= 1");
  Rational sum = 0;
  Integer p;
  const auto binom = binomial_row(n);
  for (std::size_t k = 0; k < binom.size(); ++k) {
    mpz_pow_ui(p.get_mpz_t(), binom[k].get_mpz_t(), static_cast<unsigned long>(d));
    sum += Rational(p) * row[k];
  }
  return sum;
}

}  // namespace

Rational weighted_sum(int d, std::int64_t n) { return weighted_sum_row(d, n, potential_row(n)); }

Rational weighted_sum(int d, std::int64_t n, const PotentialTable& table) {
  return weighted_sum_row(d, n, table.row(n));
}

int family_denominator(FamilyKind kind) { return kind == FamilyKind::kCubic ? 3 : 2; }

std::vector<Integer> family_polynomial_power(long c, std::int64_t n) {
  // (cx+1)((c+1)x+1) = c(c+1) x^2 + (2c+1) x + 1
  const Integer q2 = Integer(c) * (c + 1), q1 = 2 * c + 1;
  std::vector<Integer> t{1};
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Integer> next(t.size() + 2, 0);
    for (std::size_t k = 0; k < t.size(); ++k) {
      next[k] += t[k];
      next[k + 1] += q1 * t[k];
      next[k + 2] += q2 * t[k];
    }
    t = std::move(next);
  }
  return t;
}

RationalSequence family_terms(const FamilySpec& spec, std::int64_t N) {
  if (spec.c < 1) throw DomainError("family parameter c must be >= 1");
  if (N < 0) throw DomainError("family_terms needs N >= 0");
  const long q = family_denominator(spec.kind);
  const bool root_loop = spec.contour == FamilyContour::kRootLoop;
  // c^j for j <= 2N.
  std::vector<Integer> cpow{1};
  for (std::int64_t j = 1; j <= 2 * N; ++j) cpow.push_back(cpow.back() * spec.c);

  const Integer q2 = Integer(spec.c) * (spec.c + 1), q1 = 2 * spec.c + 1;
  std::vector<Integer> t{1};
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  for (std::int64_t n = 0; n <= N; ++n) {
    if (n > 0) {
      std::vector<Integer> next(t.size() + 2, 0);
      for (std::size_t k = 0; k < t.size(); ++k) {
        next[k] += t[k];
        next[k + 1] += q1 * t[k];
        next[k + 2] += q2 * t[k];
      }
      t = std::move(next);
    }
    // Common denominator of the 1/(q(k-n)+1).
    Integer D = 1;
    for (std::int64_t m = -n; m <= n; ++m) {
      const Integer d(std::abs(q * m + 1));
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), d.get_mpz_t());
    }
    // Root loop: (-c)^(n-k) = (-1)^(n-k) c^(2n-k) / c^n.
    Integer S = 0, term;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const std::int64_t shift = static_cast<std::int64_t>(k) - n;
      const long den = q * shift + 1;
      mpz_divexact_ui(term.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(std::abs(den)));
      term *= t[k];
      if (root_loop) term *= cpow[static_cast<std::size_t>(2 * n - static_cast<std::int64_t>(k))];
      const bool negative = (den < 0) != (root_loop && shift % 2 != 0);
      if (negative) S -= term;
      else S += term;
    }
    Rational v(S, root_loop ? Integer(D * cpow[static_cast<std::size_t>(n)]) : D);
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return RationalSequence(0, std::move(out));
}

}  // namespace apery
