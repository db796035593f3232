#pragma once

#include "markov/bigrational.hpp"
#include "markov/quadsurd.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace markov {

using Digit = std::int64_t;
using DigitWord = std::vector<Digit>;

// Finite continued fraction [a0; a1, ..., an]: a0 >= 0 and ai >= 1 for i >= 1.
struct FiniteCF {
    DigitWord digits;
};

// Convergent p_n / q_n of a continued fraction.
struct Convergent {
    BigInt p;
    BigInt q;
    BigRational value() const { return make_rational(p, q); }
};

// Throws ValidationError on an empty word or a partial quotient < 1 at positive
// index (a0 < 0 is also rejected).
void validate_digits(std::span<const Digit> digits);

// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}, seeded with
// p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1.
std::vector<Convergent> convergents(const FiniteCF& w);

// Value of [a0; a1, ..., an] as an exact rational.
BigRational finite_value(std::span<const Digit> digits);

// Eventually periodic expansion [pre_0; pre_1, ..., pre_k, period, period, ...].
// When the preperiod is empty the first period digit plays the role of a0.
// Canonical: the period is primitive and the preperiod cannot be shortened by
// rotating the period. The leading digit may be any integer (surd_cf of a
// negative surd); every other digit is >= 1.
class PeriodicCF {
public:
    PeriodicCF(DigitWord preperiod, DigitWord period);

    const DigitWord& preperiod() const { return preperiod_; }
    const DigitWord& period() const { return period_; }

    // First n digits of the expansion.
    DigitWord prefix(std::size_t n) const;
    std::string to_string() const;

    friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

private:
    DigitWord preperiod_;
    DigitWord period_;
};

QuadSurd periodic_value(const PeriodicCF& p);

// Inverse of periodic_value on irrational quadratic surds; ValidationError on
// rational input.
PeriodicCF surd_cf(const QuadSurd& s);

// Image of x under the Moebius map x -> (p_n x + p_{n-1}) / (q_n x + q_{n-1})
// of the digit word, i.e. the value [a0; a1, ..., an + 1/x ... ] written
// [a0; a1, ..., an, x] for x > 1 (or x = tail complete quotient).
QuadSurd attach_tail(std::span<const Digit> digits, const QuadSurd& tail);

// Fibonacci number F_n with F_1 = F_2 = 1 (F_0 = 0).
BigInt fibonacci(unsigned n);

}  // namespace markov
