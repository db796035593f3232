#pragma once

#include "markov/interval.hpp"
#include "markov/quadsurd.hpp"
#include "markov/radical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace markov {

// A real number known either exactly, as a sum of at most two quadratic surds
// (possibly over different radicands), or only through a certified enclosure.
// Exact values can be enclosed to any requested width.
class AlgebraicValue {
public:
    AlgebraicValue() : AlgebraicValue(QuadSurd{}) {}
    explicit AlgebraicValue(const QuadSurd& s);
    AlgebraicValue(const QuadSurd& s1, const QuadSurd& s2);
    // A value known only through an enclosure.
    static AlgebraicValue inexact(Interval enclosure);

    bool is_exact() const { return exact_; }
    const std::vector<QuadSurd>& terms() const { return terms_; }
    RadicalSum exact_value() const;  // requires is_exact()

    // Enclosure at the given working precision (exact values only are refinable).
    Interval enclosure(mpfr_prec_t precision = 128) const;
    // Doubles precision until the enclosure width is <= tol.
    Interval refine(double tol) const;
    double to_double() const;

    // Decimal truncated to `digits` places after the point.
    std::string decimal(int digits) const;
    // Exact closed form, e.g. "(1+sqrt(5))/2 + sqrt(2)-1"; "~[lo,hi]" when inexact.
    std::string to_string() const;

    AlgebraicValue operator+(const BigRational& r) const;

private:
    std::vector<QuadSurd> terms_;
    bool exact_ = true;
    std::optional<Interval> inexact_enclosure_;
};

// Three-way comparison. Enclosures decide when they are disjoint; overlapping
// exact values fall back to exact radical sign determination. Comparing an
// inexact value with overlapping enclosures throws NumericError.
int compare(const AlgebraicValue& x, const AlgebraicValue& y);
int compare(const AlgebraicValue& x, const BigRational& y);
inline bool operator<(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) < 0; }
inline bool operator==(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) == 0; }

}  // namespace markov
