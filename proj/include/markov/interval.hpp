#pragma once

#include "markov/bigrational.hpp"

#include <mpfr.h>

#include <string>

namespace markov {

constexpr mpfr_prec_t kMinPrecision = 64;

// Closed interval [lo, hi] of MPFR floats. Every operation rounds the lower end
// toward -inf and the upper end toward +inf, so the true result of the real
// operation on any points of the operands lies in the returned interval.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 128);
    Interval(const BigRational& exact, mpfr_prec_t precision);
    Interval(const BigInt& exact, mpfr_prec_t precision);
    Interval(const BigRational& lower, const BigRational& upper, mpfr_prec_t precision);
    ~Interval();

    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;

    static Interval sqrt_of(const BigInt& radicand, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return precision_; }
    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }
    double lower_double() const;  // rounded down
    double upper_double() const;  // rounded up
    double mid_double() const;
    double width_double() const;  // rounded up

    bool contains(const BigRational& x) const;
    bool contains(const Interval& other) const;
    bool disjoint(const Interval& other) const;
    // True when every point of *this is strictly below every point of other.
    bool certainly_less(const Interval& other) const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Requires b not to contain zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    // Convex hull.
    friend Interval hull(const Interval& a, const Interval& b);
    // Raises a non-negative interval to a non-negative real power.
    Interval pow(const Interval& exponent) const;

    std::string to_string(int digits = 20) const;

private:
    void init(mpfr_prec_t precision);
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// floor(x * 10^digits) when the enclosure pins it down; returns false otherwise.
bool scaled_floor(const Interval& x, int digits, BigInt& out);

// Renders |x| truncated to `digits` decimals (with sign) from an integer that
// equals floor(|x| * 10^digits).
std::string format_scaled(const BigInt& scaled, int digits, bool negative);

}  // namespace markov
