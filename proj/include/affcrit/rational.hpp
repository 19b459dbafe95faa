#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace affcrit {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

bool is_integer(const Rational& q);

// Requires is_integer(q) and that the value fits; throws otherwise.
std::int64_t to_int64(const Rational& q);

// Checked int64 arithmetic for character coefficients.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace affcrit
