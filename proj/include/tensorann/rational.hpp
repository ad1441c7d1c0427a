#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tensorann {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Comma-separated rationals; the empty string is the empty list.
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join_rationals(const std::vector<Rational>& values, std::string_view sep = ",");

}  // namespace tensorann
