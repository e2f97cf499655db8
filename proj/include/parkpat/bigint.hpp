#pragma once

#include <gmpxx.h>

#include <string>

namespace parkpat {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);
BigInt catalan_number(unsigned n);
BigInt ipow(const BigInt& base, unsigned e);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& q);

}  // namespace parkpat
