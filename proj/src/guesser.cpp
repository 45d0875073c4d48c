#include "apery/guesser.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "apery/errors.hpp"

namespace apery {

namespace {

// Cells whose system has full rank modulo this prime have full rank over Q
// and are rejected without touching big integers.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const Integer& z) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
  return r.get_ui();
}

std::uint64_t reduce_signed(std::int64_t n) {
  const auto m = static_cast<std::int64_t>(kPrime);
  const std::int64_t r = n % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

class Guesser {
 public:
  explicit Guesser(const RationalSequence& terms) : terms_(terms) {
    residues_.reserve(terms.size());
    for (const auto& t : terms.terms) {
      const std::uint64_t den = reduce(t.get_den());
      if (den == 0) {
        modular_ok_ = false;
        break;
      }
      residues_.push_back(mulmod(reduce(t.get_num()), invmod(den)));
    }
  }

  std::optional<PRecurrence> cell(int order, int degree) const {
    const std::size_t unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
    const std::size_t available = terms_.size() > static_cast<std::size_t>(order)
                                      ? terms_.size() - static_cast<std::size_t>(order)
                                      : 0;
    const std::size_t used = std::min(available, unknowns + 10);
    if (used < unknowns + 1) return std::nullopt;

    std::vector<std::size_t> rows(used);
    for (std::size_t r = 0; r < used; ++r) rows[r] = r;

    if (modular_ok_) {
      const auto pivots = modular_pivot_rows(order, degree, rows);
      if (pivots.size() == unknowns) return std::nullopt;
      if (auto hit = solve(order, degree, pivots, used)) return hit;
    }
    return solve(order, degree, rows, used);
  }

 private:
  std::int64_t index_of(std::size_t row) const { return terms_.start_index + static_cast<std::int64_t>(row); }

  // Rows of the system in insertion order that are independent modulo p.
  std::vector<std::size_t> modular_pivot_rows(int order, int degree, const std::vector<std::size_t>& rows) const {
    const std::size_t width = static_cast<std::size_t>((order + 1) * (degree + 1));
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivot_col, picked;
    std::vector<std::uint64_t> row(width);
    for (std::size_t r : rows) {
      const std::uint64_t n = reduce_signed(index_of(r));
      for (int i = 0; i <= order; ++i) {
        std::uint64_t v = residues_[r + static_cast<std::size_t>(i)];
        for (int j = 0; j <= degree; ++j) {
          row[static_cast<std::size_t>(i * (degree + 1) + j)] = v;
          v = mulmod(v, n);
        }
      }
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::uint64_t f = row[pivot_col[b]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < width; ++c) {
          if (basis[b][c] == 0) continue;
          row[c] = (row[c] + kPrime - mulmod(f, basis[b][c])) % kPrime;
        }
      }
      const auto it = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
      if (it == row.end()) continue;
      const std::size_t col = static_cast<std::size_t>(it - row.begin());
      const std::uint64_t inv = invmod(row[col]);
      for (auto& v : row) v = mulmod(v, inv);
      basis.push_back(row);
      pivot_col.push_back(col);
      picked.push_back(r);
      if (picked.size() == width) break;
    }
    return picked;
  }

  // Integer row for the equation at index of `row`, scaled by the lcm of
  // the term denominators it touches.
  std::vector<Integer> exact_row(int order, int degree, std::size_t r) const {
    Integer scale = 1;
    for (int i = 0; i <= order; ++i)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), terms_.terms[r + static_cast<std::size_t>(i)].get_den_mpz_t());
    const Integer n(static_cast<long>(index_of(r)));
    std::vector<Integer> out(static_cast<std::size_t>((order + 1) * (degree + 1)));
    for (int i = 0; i <= order; ++i) {
      const Rational& u = terms_.terms[r + static_cast<std::size_t>(i)];
      Integer v = u.get_num() * (scale / u.get_den());
      for (int j = 0; j <= degree; ++j) {
        out[static_cast<std::size_t>(i * (degree + 1) + j)] = v;
        v *= n;
      }
    }
    return out;
  }

  std::optional<PRecurrence> solve(int order, int degree, const std::vector<std::size_t>& rows,
                                   std::size_t used) const {
    auto basis = nullspace(order, degree, rows);
    if (basis.empty()) return std::nullopt;
    if (basis.size() > 1 && used + static_cast<std::size_t>(order) < terms_.size()) {
      // Ambiguous on the oversampled window: let every equation decide.
      std::vector<std::size_t> all(terms_.size() - static_cast<std::size_t>(order));
      for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
      basis = nullspace(order, degree, all);
    }
    std::optional<PRecurrence> best;
    std::size_t best_bits = 0;
    for (const auto& v : basis) {
      std::vector<PolyInt> polys;
      for (int i = 0; i <= order; ++i) {
        const auto first = v.begin() + i * (degree + 1);
        polys.emplace_back(std::vector<Integer>(first, first + degree + 1));
      }
      if (polys.front().is_zero() || polys.back().is_zero()) continue;
      PRecurrence rec(std::move(polys));
      if (!annihilates(rec, terms_)) continue;
      std::size_t bits = 0;
      for (const auto& p : rec.coeffs())
        for (const auto& c : p.coeffs()) bits += c == 0 ? 0 : mpz_sizeinbase(c.get_mpz_t(), 2);
      if (!best || bits < best_bits) {
        best = std::move(rec);
        best_bits = bits;
      }
    }
    return best;
  }

  // Integer basis of the rational nullspace via fraction-free elimination.
  std::vector<std::vector<Integer>> nullspace(int order, int degree, const std::vector<std::size_t>& rows) const {
    const std::size_t width = static_cast<std::size_t>((order + 1) * (degree + 1));
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (std::size_t r : rows) m.push_back(exact_row(order, degree, r));

    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
      std::size_t p = rank;
      while (p < m.size() && m[p][col] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      const Integer& piv = m[rank][col];
      for (std::size_t i = rank + 1; i < m.size(); ++i) {
        const Integer f = m[i][col];
        for (std::size_t j = col + 1; j < width; ++j) {
          m[i][j] = piv * m[i][j] - f * m[rank][j];
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        m[i][col] = 0;
      }
      prev = piv;
      pivots.push_back(col);
      ++rank;
    }

    std::vector<bool> is_pivot(width, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Integer>> out;
    for (std::size_t f = 0; f < width; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> x(width, Rational(0));
      x[f] = 1;
      for (std::size_t k = rank; k-- > 0;) {
        const std::size_t pc = pivots[k];
        Rational s = 0;
        for (std::size_t j = pc + 1; j < width; ++j)
          if (x[j] != 0 && m[k][j] != 0) s += Rational(m[k][j]) * x[j];
        x[pc] = -s / Rational(m[k][pc]);
      }
      Integer den = 1;
      for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      std::vector<Integer> v(width);
      for (std::size_t j = 0; j < width; ++j) v[j] = x[j].get_num() * (den / x[j].get_den());
      out.push_back(std::move(v));
    }
    return out;
  }

  const RationalSequence& terms_;
  std::vector<std::uint64_t> residues_;
  bool modular_ok_ = true;
};

void check_bounds(const RationalSequence& terms, int max_order, int max_degree) {
  if (max_order < 1 || max_degree < 0) throw DomainError("guesser needs max_order >= 1 and max_degree >= 0");
  const std::size_t need = guess_terms_required(max_order, max_degree);
  if (terms.size() < need)
    throw InsufficientTerms("need " + std::to_string(need) + " terms for bounds (" + std::to_string(max_order) +
                            ", " + std::to_string(max_degree) + "), got " + std::to_string(terms.size()));
}

}  // namespace

std::size_t guess_terms_required(int max_order, int max_degree) {
  return static_cast<std::size_t>((max_order + 1) * (max_degree + 1) + max_order + 20);
}

std::optional<PRecurrence> guess_cell(const RationalSequence& terms, int order, int degree) {
  return Guesser(terms).cell(order, degree);
}

std::optional<PRecurrence> guess_recurrence(const RationalSequence& terms, int max_order, int max_degree) {
  check_bounds(terms, max_order, max_degree);
  const Guesser g(terms);
  for (int order = 1; order <= max_order; ++order)
    for (int degree = 0; degree <= max_degree; ++degree)
      if (auto hit = g.cell(order, degree)) return hit;
  return std::nullopt;
}

PRecurrence minimal_recurrence(const RationalSequence& terms, int order_cap, int degree_cap) {
  if (auto hit = guess_recurrence(terms, order_cap, degree_cap)) return *std::move(hit);
  throw NotFound("no recurrence with order <= " + std::to_string(order_cap) + " and degree <= " +
                 std::to_string(degree_cap));
}

}  // namespace apery
