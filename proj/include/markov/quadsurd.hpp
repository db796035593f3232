#pragma once

#include "markov/bigrational.hpp"
#include "markov/interval.hpp"
#include "markov/radical.hpp"

#include <compare>
#include <string>

namespace markov {

// Exact real (a + b*sqrt(d)) / c with d square-free, c > 0 and gcd(a, b, c) = 1.
// A rational value is stored with b = d = 0.
class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), d_(0), c_(1) {}
    QuadSurd(BigInt a, BigInt b, BigInt d, BigInt c);
    explicit QuadSurd(const BigRational& r);
    explicit QuadSurd(long value) : QuadSurd(BigRational(value)) {}

    // sqrt(n) for n >= 0.
    static QuadSurd sqrt(const BigInt& n);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }
    const BigInt& c() const { return c_; }

    bool is_rational() const { return b_ == 0; }
    BigRational rational_value() const;  // requires is_rational()

    // Arithmetic is closed when both operands share the radicand or one is rational;
    // otherwise ValidationError.
    QuadSurd operator-() const;
    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    QuadSurd reciprocal() const;

    int sign() const;
    BigInt floor() const;

    RadicalSum to_radical() const;
    Interval enclosure(mpfr_prec_t precision) const;
    double to_double() const;

    // "(1+sqrt(5))/2", "2*sqrt(2)", "sqrt(221)/5", "3/4".
    std::string to_string() const;

    friend bool operator==(const QuadSurd& x, const QuadSurd& y) = default;
    friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

private:
    void normalize();
    BigInt a_, b_, d_, c_;
};

// Accepts the to_string() format as well as plain rationals/decimals.
QuadSurd parse_quad_surd(const std::string& text);

}  // namespace markov
