#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace resonance {

using BigInt = mpz_class;

// GMP keeps mpq_class canonical after every arithmetic operation:
// lowest terms, positive denominator, zero stored as 0/1. The two-argument
// constructor does not, so build fractions with make_rational.
using Rational = mpq_class;

// num/den in lowest terms. Throws std::domain_error when den is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

using RationalVector = std::vector<Rational>;

// Accepts "a", "-a", "a/b", "-a/b" with decimal digits only. b must be nonzero.
Rational parse_rational(std::string_view text);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

std::size_t bit_length(const BigInt& value);

BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);

bool is_zero(const RationalVector& v);

// Scales v by the lcm of its denominators and divides by the gcd of the
// resulting numerators; the first nonzero entry becomes positive.
std::vector<BigInt> primitive_integer_vector(const RationalVector& v);

}  // namespace resonance
