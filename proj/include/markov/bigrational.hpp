#pragma once

#include <gmpxx.h>

#include <string>

namespace markov {

using BigInt = mpz_class;

// Canonical rational: positive denominator, numerator and denominator coprime.
// Every BigRational produced by this library has been canonicalized.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRational& x);

// Exact parse of "p", "p/q" or a finite decimal such as "-3.1415".
BigRational parse_rational(const std::string& text);

BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

}  // namespace markov
