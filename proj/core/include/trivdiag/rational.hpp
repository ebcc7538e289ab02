#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace trivdiag {

using Integer = mpz_class;
using Rational = mpq_class;

// Always "num/den", including integers ("3/1"), so serialized values are
// uniform regardless of magnitude.
std::string to_fraction_string(const Rational& value);

// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Shortest readable form: "3", "-1/2".
std::string to_display_string(const Rational& value);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);

// Rising factorial u (u+1) ... (u+m-1); m = 0 gives 1.
Rational rising_factorial(const Rational& u, unsigned long m);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace trivdiag
