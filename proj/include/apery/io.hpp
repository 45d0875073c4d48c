#pragma once

// Text formats read by the command-line tool.

#include <string>
#include <vector>

#include "apery/bigreal.hpp"
#include "apery/recurrence.hpp"

namespace apery {

/// {"order": L, "coeffs": [["c00", "c01", ...], ...]}: L+1 arrays of decimal
/// integer strings, ascending in n, for sum_i c_i(n) u(n+i) = 0.
/// Throws ParseError with the line and column of the offending token.
PRecurrence parse_recurrence(const std::string& text);
std::string format_recurrence(const PRecurrence& rec);

/// One exact rational per line ("p/q" or an integer). An optional header
/// "# start=<index>" sets the first index; other '#' lines and blank lines
/// are ignored.
RationalSequence parse_sequence(const std::string& text);
std::string format_sequence(const RationalSequence& seq);

/// A decimal literal; the precision is its count of significant digits.
/// Surrounding whitespace is ignored.
BigReal parse_value(const std::string& text);

/// Comma-separated rationals such as "0,6" or "1/2,-3".
std::vector<Rational> parse_rational_list(const std::string& text);

/// Whole file as a string; throws Error when unreadable.
std::string read_file(const std::string& path);

}  // namespace apery
