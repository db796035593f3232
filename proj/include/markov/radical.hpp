#pragma once

#include "markov/bigrational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace markov {

// Prime factorization n = prod p^e for n >= 1 (trial division, then Pollard-Brent).
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

// n = root^2 * kernel with kernel square-free. Requires n >= 0; 0 maps to (0, 0).
struct SquareFreeSplit {
    BigInt root;
    BigInt kernel;
};
SquareFreeSplit square_free_split(const BigInt& n);

// A finite sum  sum_k c_k * sqrt(k)  with rational coefficients over distinct
// square-free radicands k (k = 1 is the rational part). This is the exact
// comparison engine behind QuadSurd and AlgebraicValue: products stay closed
// because sqrt(k1)*sqrt(k2) = g*sqrt(k1*k2/g^2) with g = gcd(k1, k2).
class RadicalSum {
public:
    RadicalSum() = default;
    explicit RadicalSum(const BigRational& rational);

    // Adds coeff * sqrt(radicand); the radicand need not be square-free.
    void add_term(const BigRational& coeff, const BigInt& radicand);

    const std::map<BigInt, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Exact sign in {-1, 0, 1}.
    int sign() const;

    RadicalSum operator-() const;
    RadicalSum& operator+=(const RadicalSum& other);
    RadicalSum& operator-=(const RadicalSum& other);
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

    double to_double() const;

private:
    std::map<BigInt, BigRational> terms_;
};

// Exact three-way comparison of two radical sums.
int compare(const RadicalSum& a, const RadicalSum& b);

}  // namespace markov
