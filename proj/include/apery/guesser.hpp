#pragma once

// Recovering a P-recurrence from exact terms by linear algebra on the
// unknown polynomial coefficients.

#include <cstdint>
#include <optional>

#include "apery/recurrence.hpp"

namespace apery {

/// Terms guess_recurrence needs for the bounds (L, D): (L+1)(D+1) + L + 20.
std::size_t guess_terms_required(int max_order, int max_degree);

/// Minimal (order, then degree) recurrence with max_order, max_degree bounds
/// that annihilates every term. Each (order, degree) cell is solved from the
/// first (order+1)(degree+1)+10 equations and then verified on all of them.
/// Throws InsufficientTerms when terms is shorter than guess_terms_required.
std::optional<PRecurrence> guess_recurrence(const RationalSequence& terms, int max_order, int max_degree);

/// As guess_recurrence, but throws NotFound when the caps are exhausted.
PRecurrence minimal_recurrence(const RationalSequence& terms, int order_cap, int degree_cap);

/// Solve one (order, degree) cell only; empty when no verified candidate exists.
std::optional<PRecurrence> guess_cell(const RationalSequence& terms, int order, int degree);

}  // namespace apery
