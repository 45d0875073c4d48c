#include "apery/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <mutex>
#include <thread>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/guesser.hpp"
#include "apery/sequences.hpp"

namespace apery {

namespace {

// Agreement in significant digits between two reals.
int agreement(const BigReal& a, const BigReal& b, int cap) {
  const BigReal gap = (a - b).abs();
  if (gap.is_zero()) return cap;
  const double d = a.log10_abs() - gap.log10_abs();
  return static_cast<int>(std::clamp(std::floor(d), 0.0, static_cast<double>(cap)));
}

RationalSequence prefix(const RationalSequence& s, std::int64_t N) {
  const auto count = static_cast<std::size_t>(N + 1);
  return RationalSequence(s.start_index, std::vector<Rational>(s.terms.begin(), s.terms.begin() + count));
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

Zeta3Report run_zeta3(std::int64_t N, int digits) {
  Zeta3Report r;
  r.N = N;
  r.digits = digits;
  r.convergence = apery_limit(zeta3_recurrence(), make_sequence(0, {1, 5}), make_sequence(0, {0, 6}), N, digits);
  r.agreement_digits = agreement(r.convergence.limit, zeta3(digits), digits);
  return r;
}

InitialVector cs_initial_vector(const PRecurrence& rec, const RationalSequence& A) {
  const int L = rec.order();
  if (L < 2) throw DomainError("a first-order recurrence has no solution with B(0) = 0, B(1) = 1");
  InitialVector out;
  out.values.assign(static_cast<std::size_t>(L), Rational(0));
  out.values[1] = 1;
  if (L == 2) {
    out.method = "B(0)=0, B(1)=1";
    return out;
  }

  const std::size_t unknowns = static_cast<std::size_t>(L - 2);
  std::vector<std::vector<Rational>> rows;  // unknowns coefficients, then right-hand side
  std::vector<int> used;
  for (int j = 1; j < L; ++j) {
    const Integer n(-j);
    bool blind = true;  // relation at n = -j never touches negative indices
    for (int i = 0; i < j; ++i)
      if (eval_coeff(rec.coeff(i), n) != 0) blind = false;
    if (!blind) continue;
    Rational onA = 0;
    for (int i = j; i <= L; ++i) onA += Rational(eval_coeff(rec.coeff(i), n)) * A.at(i - j);
    if (onA != 0) continue;
    std::vector<Rational> row(unknowns + 1, Rational(0));
    bool any = false;
    for (int i = j; i <= L; ++i) {
      const Rational c(eval_coeff(rec.coeff(i), n));
      const int idx = i - j;
      if (idx >= 2) {
        row[static_cast<std::size_t>(idx - 2)] += c;
        any = any || c != 0;
      } else {
        row[unknowns] -= c * out.values[static_cast<std::size_t>(idx)];
      }
    }
    if (!any) {
      if (row[unknowns] != 0) out.warnings.push_back("relation at n = " + std::to_string(-j) + " contradicts B(0..1)");
      continue;
    }
    rows.push_back(std::move(row));
    used.push_back(-j);
  }

  // Gauss-Jordan on the collected relations.
  std::vector<int> pivot_of(unknowns, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational piv = rows[rank][col];
    for (auto& v : rows[rank]) v /= piv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t k = 0; k <= unknowns; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_of[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][unknowns] != 0) out.warnings.push_back("zero-extension relations are inconsistent");
  for (std::size_t col = 0; col < unknowns; ++col)
    if (pivot_of[col] >= 0) out.values[col + 2] = rows[static_cast<std::size_t>(pivot_of[col])][unknowns];

  std::string where;
  for (int n : used) where += (where.empty() ? "" : ", ") + std::to_string(n);
  out.method = "B(0)=0, B(1)=1; B(2.." + std::to_string(L - 1) + ") from zero-extension relations";
  out.method += used.empty() ? " (none apply)" : " at n = " + where;
  if (rank < unknowns) {
    out.method += "; " + std::to_string(unknowns - rank) + " value(s) zero-filled";
    out.warnings.push_back("initial vector underdetermined; free values set to 0");
  }
  return out;
}

CsReport run_cs(int d, std::int64_t N, int digits, const CsOptions& options) {
  if (d < 1) throw DomainError("cs needs d >= 1");
  const auto need = static_cast<std::int64_t>(guess_terms_required(options.order_cap, options.degree_cap));
  const RationalSequence all = binomial_power_sums(d, std::max(N, need - 1));
  CsReport r{d, N, digits, minimal_recurrence(all, options.order_cap, options.degree_cap), {}, {}, {}, {}, {},
             false, {}};
  InitialVector init = cs_initial_vector(r.recurrence, all);
  r.initial_b = init.values;
  r.initial_method = init.method;
  r.warnings = init.warnings;

  const RationalSequence B = iterate(r.recurrence, RationalSequence(0, init.values), N);
  r.convergence = limit_from_sequences(prefix(all, N), B, 2 * digits);
  for (const auto& w : r.convergence.warnings) r.warnings.push_back(w);

  r.expected_coefficient = Rational(1, d + 1);
  r.identified = identify_linear(r.convergence.limit, default_basis(2 * digits), digits);
  r.matches_expected = r.identified && r.identified->name == "zeta2" &&
                       r.identified->coefficient == r.expected_coefficient && r.identified->constant == 0;
  if (!r.identified) r.warnings.push_back("limit not identified over {zeta2, zeta3, pi}");
  return r;
}

Theorem1Report run_theorem1(int d, std::int64_t N, int digits) {
  if (d < 1) throw DomainError("theorem1 needs d >= 1");
  if (N < 1) throw DomainError("theorem1 needs N >= 1");
  Theorem1Report r;
  r.d = d;
  r.N = N;
  r.digits = digits;
  const RationalSequence A = binomial_power_sums(d, N);
  const PotentialTable table(N);
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(N + 1));
  for (std::int64_t n = 0; n <= N; ++n) b.push_back(weighted_sum(d, n, table));
  const RationalSequence B(0, std::move(b));
  r.convergence = limit_from_sequences(A, B, digits, LimitOptions{false});

  // Wide enough to resolve every error up to n = N: the last exact step
  // |r_N - r_(N-1)| bounds how small the error has become.
  int wd = digits + kGuardDigits;
  if (N >= 2) {
    const Rational step = B.at(N) / A.at(N) - B.at(N - 1) / A.at(N - 1);
    if (step != 0) wd += std::max(0, static_cast<int>(std::ceil(-BigReal(step, 30).log10_abs())) + 10);
  }
  const BigReal z = zeta2(wd);
  for (std::int64_t n = 0; n <= std::min<std::int64_t>(N, 4); ++n) r.head.push_back(B.at(n) / A.at(n));
  for (std::int64_t n = 1; n <= N; ++n)
    r.log10_errors.push_back((BigReal(Rational(B.at(n) / A.at(n)), wd) - z).log10_abs());
  r.error_at_N = (BigReal(Rational(B.at(N) / A.at(N)), wd) - z).abs().with_digits(10);

  // Errors carry an oscillating subdominant mode, so single steps may rise;
  // compare maxima of consecutive blocks over the last half instead.
  constexpr std::size_t kBlock = 5;
  const auto& e = r.log10_errors;
  std::vector<double> peaks;
  for (std::size_t b = e.size() / 2; b + kBlock <= e.size(); b += kBlock)
    peaks.push_back(*std::max_element(e.begin() + static_cast<std::ptrdiff_t>(b),
                                      e.begin() + static_cast<std::ptrdiff_t>(b + kBlock)));
  r.geometric = peaks.size() >= 2;
  r.max_error_ratio = 0.0;
  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    const double ratio = std::pow(10.0, peaks[i + 1] - peaks[i]);
    if (!(ratio < 1.0)) r.geometric = false;
    r.max_error_ratio = std::max(r.max_error_ratio, ratio);
  }
  return r;
}

std::vector<FamilySweepEntry> run_family_sweep(FamilyKind kind, long lo, long hi, std::int64_t N, int digits,
                                               unsigned threads, const FamilyOptions& options) {
  if (lo < 1 || hi < lo) throw DomainError("family sweep needs 1 <= lo <= hi");
  std::vector<FamilySweepEntry> out(static_cast<std::size_t>(hi - lo + 1));
  for (long c = lo; c <= hi; ++c) out[static_cast<std::size_t>(c - lo)].c = c;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      try {
        out[i].report = run_family(FamilySpec{kind, out[i].c}, N, digits, options);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(out.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

Json recurrence_to_json(const PRecurrence& rec) {
  Json coeffs = Json::array();
  for (const auto& p : rec.coeffs()) {
    Json row = Json::array();
    for (const auto& c : p.coeffs()) row.push_back(c.get_str());
    coeffs.push_back(std::move(row));
  }
  return Json{{"order", rec.order()}, {"coeffs", std::move(coeffs)}};
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json base_report(const std::string& experiment, Json parameters) {
  return Json{{"experiment", experiment},
              {"parameters", std::move(parameters)},
              {"recurrence", nullptr},
              {"limit_digits", nullptr},
              {"alpha", nullptr},
              {"delta", nullptr},
              {"mu", nullptr},
              {"identified", nullptr},
              {"empirical", true},
              {"achieved_digits", 0},
              {"warnings", Json::array()},
              {"details", Json::object()},
              {"timestamp", utc_timestamp()}};
}

void fill_convergence(Json& j, const ConvergenceReport& conv) {
  j["limit_digits"] = conv.limit.to_string(std::max(conv.achieved_digits, 1));
  if (conv.alpha_estimate) j["alpha"] = conv.alpha_estimate->to_string(12);
  if (conv.delta_estimate) j["delta"] = conv.delta_estimate->to_string(8);
  if (conv.mu_estimate) j["mu"] = conv.mu_estimate->to_string(8);
  j["empirical"] = conv.empirical;
  j["achieved_digits"] = conv.achieved_digits;
  for (const auto& w : conv.warnings) j["warnings"].push_back(w);
  j["details"]["converged"] = conv.converged;
  j["details"]["n_used"] = conv.n_used;
  j["details"]["requested_digits"] = conv.requested_digits;
  j["details"]["max_decay_ratio"] = conv.max_decay_ratio();
}

namespace {

Json algebraic_json(const AlgebraicCandidate& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.polynomial.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"kind", "algebraic"},
              {"coefficients", std::move(coeffs)},
              {"degree", a.degree},
              {"residual", a.residual.to_string(6)},
              {"confirmed_at", a.confirmed_at}};
}

Json linear_json(const LinearIdentification& l) {
  return Json{{"kind", "linear"},
              {"basis", l.name},
              {"coefficient", rational_string(l.coefficient)},
              {"constant", rational_string(l.constant)},
              {"residual", l.relation.residual.to_string(6)},
              {"confirmed_at", l.confirmed_at}};
}

const char* kind_name(FamilyKind k) { return k == FamilyKind::kCubic ? "cubic" : "quadratic"; }

}  // namespace

Json to_json(const Zeta3Report& r) {
  Json j = base_report("zeta3", Json{{"terms", r.N}, {"digits", r.digits}});
  j["recurrence"] = recurrence_to_json(zeta3_recurrence());
  fill_convergence(j, r.convergence);
  j["identified"] = Json{{"kind", "linear"}, {"basis", "zeta3"}, {"coefficient", "1"}, {"constant", "0"},
                         {"residual", nullptr}, {"agreement_digits", r.agreement_digits}};
  j["details"]["initial_a"] = {"0", "6"};
  j["details"]["initial_b"] = {"1", "5"};
  j["details"]["decay_variation"] = r.convergence.decay_variation();
  return j;
}

Json to_json(const CsReport& r) {
  Json j = base_report("cs", Json{{"d", r.d}, {"terms", r.N}, {"digits", r.digits}});
  j["recurrence"] = recurrence_to_json(r.recurrence);
  fill_convergence(j, r.convergence);
  j["warnings"] = Json::array();
  for (const auto& w : r.warnings) j["warnings"].push_back(w);
  if (r.identified) j["identified"] = linear_json(*r.identified);
  Json init = Json::array();
  for (const auto& v : r.initial_b) init.push_back(rational_string(v));
  j["details"]["initial_b"] = std::move(init);
  j["details"]["initial_method"] = r.initial_method;
  j["details"]["expected"] = rational_string(r.expected_coefficient) + "*zeta2";
  j["details"]["matches_expected"] = r.matches_expected;
  return j;
}

Json to_json(const Theorem1Report& r) {
  Json j = base_report("theorem1", Json{{"d", r.d}, {"terms", r.N}, {"digits", r.digits}});
  fill_convergence(j, r.convergence);
  j["identified"] = Json{{"kind", "linear"}, {"basis", "zeta2"}, {"coefficient", "1"}, {"constant", "0"},
                         {"residual", r.error_at_N.to_string(6)}};
  Json head = Json::array();
  for (const auto& q : r.head) head.push_back(rational_string(q));
  j["details"]["head"] = std::move(head);
  j["details"]["error_at_N"] = r.error_at_N.to_string(6);
  j["details"]["geometric"] = r.geometric;
  j["details"]["max_error_ratio"] = r.max_error_ratio;
  return j;
}

Json to_json(const FamilyReport& r, std::int64_t N, int digits) {
  Json j = base_report("family", Json{{"kind", kind_name(r.spec.kind)}, {"c", r.spec.c}, {"terms", N},
                                      {"digits", digits}});
  if (r.recurrence) j["recurrence"] = recurrence_to_json(*r.recurrence);
  if (r.convergence) fill_convergence(j, *r.convergence);
  j["warnings"] = Json::array();
  for (const auto& w : r.warnings) j["warnings"].push_back(w);
  if (r.identified) j["identified"] = algebraic_json(*r.identified);
  Json expected = Json::array();
  for (const auto& c : r.expected.coeffs()) expected.push_back(c.get_str());
  j["details"]["expected_polynomial"] = std::move(expected);
  j["details"]["polynomial_matches"] = r.polynomial_matches;
  if (r.closed_form) j["details"]["closed_form"] = r.closed_form->to_string();
  j["details"]["closed_form_agrees"] = r.closed_form_agrees;
  if (r.root_identity) j["details"]["root_identity"] = *r.root_identity;
  if (r.kappa) j["details"]["kappa"] = r.kappa->value.to_string(12);
  return j;
}

Json to_json(const std::vector<FamilySweepEntry>& sweep, FamilyKind kind, std::int64_t N, int digits) {
  const long lo = sweep.empty() ? 0 : sweep.front().c, hi = sweep.empty() ? 0 : sweep.back().c;
  Json j = base_report("family-sweep", Json{{"kind", kind_name(kind)}, {"c_range", std::to_string(lo) + ".." +
                                                                                       std::to_string(hi)},
                                            {"terms", N}, {"digits", digits}});
  Json table = Json::array();
  int achieved = -1;
  for (const auto& e : sweep) {
    Json row{{"c", e.c}};
    if (!e.report) {
      row["error"] = e.error;
      j["warnings"].push_back("c = " + std::to_string(e.c) + ": " + e.error);
      table.push_back(std::move(row));
      continue;
    }
    const FamilyReport& r = *e.report;
    if (r.convergence) {
      row["limit"] = r.convergence->limit.to_string(std::min(30, std::max(r.convergence->achieved_digits, 1)));
      achieved = achieved < 0 ? r.convergence->achieved_digits : std::min(achieved, r.convergence->achieved_digits);
    }
    row["mu"] = r.mu_estimate ? Json(r.mu_estimate->to_string(8)) : Json(nullptr);
    row["kappa"] = r.kappa ? Json(r.kappa->value.to_string(8)) : Json(nullptr);
    if (r.identified) {
      Json coeffs = Json::array();
      for (const auto& c : r.identified->polynomial.coeffs()) coeffs.push_back(c.get_str());
      row["polynomial"] = std::move(coeffs);
    } else {
      row["polynomial"] = nullptr;
    }
    row["polynomial_matches"] = r.polynomial_matches;
    row["closed_form_agrees"] = r.closed_form_agrees;
    table.push_back(std::move(row));
  }
  j["achieved_digits"] = std::max(achieved, 0);
  j["details"]["table"] = std::move(table);
  return j;
}

}  // namespace apery
