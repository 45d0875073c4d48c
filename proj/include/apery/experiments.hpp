#pragma once

// The end-to-end experiments as library calls, and their JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apery/families.hpp"
#include "apery/identifier.hpp"
#include "apery/limits.hpp"
#include "apery/recurrence.hpp"
#include "json.hpp"

namespace apery {

using Json = nlohmann::ordered_json;

struct Zeta3Report {
  std::int64_t N = 0;
  int digits = 0;
  ConvergenceReport convergence;
  /// Significant digits shared with constants::zeta3 at the same precision.
  int agreement_digits = 0;
};

/// lim a(n)/b(n) for zeta3_recurrence() with b = (1, 5), a = (0, 6).
Zeta3Report run_zeta3(std::int64_t N, int digits);

struct CsOptions {
  int order_cap = 5;
  int degree_cap = 20;
};

struct CsReport {
  int d = 0;
  std::int64_t N = 0;
  int digits = 0;
  PRecurrence recurrence;
  /// B(0..L-1) actually used.
  std::vector<Rational> initial_b;
  /// How B(2..L-1) were chosen.
  std::string initial_method;
  ConvergenceReport convergence;
  std::optional<LinearIdentification> identified;
  Rational expected_coefficient;
  bool matches_expected = false;
  std::vector<std::string> warnings;
};

/// Result of completing B(0) = 0, B(1) = 1 to a full initial vector.
struct InitialVector {
  std::vector<Rational> values;
  std::string method;
  std::vector<std::string> warnings;
};

/// For order L > 2, B(2..L-1) solve the relations at n = -j (1 <= j < L)
/// that survive zero extension to negative indices: those where every
/// c_i(-j) with i < j vanishes and that A satisfies. Unknowns the relations
/// leave free are set to zero, with a warning.
InitialVector cs_initial_vector(const PRecurrence& rec, const RationalSequence& A);

/// A = binomial power sums, minimal recurrence, B from cs_initial_vector,
/// limit at 2*digits, identify_linear over {zeta2, zeta3, pi}.
/// Throws NotFound from the guesser.
CsReport run_cs(int d, std::int64_t N, int digits, const CsOptions& options = {});

struct Theorem1Report {
  int d = 0;
  std::int64_t N = 0;
  int digits = 0;
  ConvergenceReport convergence;
  /// B'(n)/A(n) for the first few n, exact.
  std::vector<Rational> head;
  /// log10 |B'(n)/A(n) - zeta2| for n = 1..N.
  std::vector<double> log10_errors;
  BigReal error_at_N;
  /// Over the last half, maxima of |error| on consecutive blocks of 5
  /// indices strictly decrease; max_error_ratio is the largest block ratio.
  bool geometric = false;
  double max_error_ratio = 0.0;
};

/// B'(n) = sum_k C(n,k)^d c(n,k) against A(n) = sum_k C(n,k)^d.
Theorem1Report run_theorem1(int d, std::int64_t N, int digits);

/// Runs run_family for each c in [lo, hi] on up to `threads` workers.
/// Results are sorted by c; a failing c is reported in `error`.
struct FamilySweepEntry {
  long c = 0;
  std::optional<FamilyReport> report;
  std::string error;
};
std::vector<FamilySweepEntry> run_family_sweep(FamilyKind kind, long lo, long hi, std::int64_t N, int digits,
                                               unsigned threads, const FamilyOptions& options = {});

/// {"order": L, "coeffs": [["c00", ...], ...]}.
Json recurrence_to_json(const PRecurrence& rec);

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

Json to_json(const Zeta3Report& r);
Json to_json(const CsReport& r);
Json to_json(const Theorem1Report& r);
Json to_json(const FamilyReport& r, std::int64_t N, int digits);
Json to_json(const std::vector<FamilySweepEntry>& sweep, FamilyKind kind, std::int64_t N, int digits);

/// Common report skeleton with every schema field present.
Json base_report(const std::string& experiment, Json parameters);
void fill_convergence(Json& report, const ConvergenceReport& conv);

}  // namespace apery
