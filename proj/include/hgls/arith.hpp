#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hgls {

using BigInt = mpz_class;
using BigRational = mpq_class;

// p/q with the denominator dropped when it is 1.
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

// Accepts "p", "-p" or "p/q"; throws Error("ParseError") otherwise.
BigRational parse_rational(std::string_view text);

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
long gcd(long a, long b);

// floor and fractional part in [0,1)
BigInt floor(const BigRational& v);
BigRational frac(const BigRational& v);
bool is_integer(const BigRational& v);

// base^e for integer e of either sign; base must be nonzero when e < 0.
BigRational power(const BigRational& base, long e);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace hgls
