#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypfib {

using BigInt = mpz_class;

// GMP keeps mpq_class in lowest terms with a positive denominator as long as
// every value goes through canonicalize(); all constructors below do.
using BigRational = mpq_class;

// Builds num/den in canonical form. Throws ParseError on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

// Accepts "17", "-3", "7/2", " -4/6 " (reduced on parse).
BigRational parse_rational(std::string_view text);

bool is_integer(const BigRational& q);

std::string to_string(const BigInt& z);
std::string to_string(const BigRational& q);

} // namespace hypfib
