#include "markov/radical.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace markov {

namespace {

constexpr unsigned long kTrialLimit = 10000;

BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const BigInt& v) {
            BigInt out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const BigInt& n, std::vector<BigInt>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    BigInt root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_into(root, primes);
        factor_into(root, primes);
        return;
    }
    BigInt d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(BigInt(n / d), primes);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n_in) {
    if (n_in < 1) throw ValidationError("factorize requires n >= 1");
    BigInt n = n_in;
    std::vector<BigInt> primes;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

SquareFreeSplit square_free_split(const BigInt& n) {
    if (n < 0) throw ValidationError("square_free_split of a negative number");
    if (n == 0) return {0, 0};
    BigInt root = 1, kernel = 1;
    for (const auto& [p, e] : factorize(n)) {
        for (unsigned i = 0; i < e / 2; ++i) root *= p;
        if (e % 2 == 1) kernel *= p;
    }
    return {root, kernel};
}

RadicalSum::RadicalSum(const BigRational& rational) {
    if (rational != 0) terms_.emplace(BigInt(1), rational);
}

void RadicalSum::add_term(const BigRational& coeff, const BigInt& radicand) {
    if (coeff == 0 || radicand == 0) return;
    if (radicand < 0) throw ValidationError("negative radicand");
    auto [root, kernel] = square_free_split(radicand);
    auto& slot = terms_[kernel];
    slot += coeff * BigRational(root);
    if (slot == 0) terms_.erase(kernel);
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    for (const auto& [k, c] : other.terms_) {
        auto& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) { return *this += -other; }

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum out;
    for (const auto& [k1, c1] : a.terms_) {
        for (const auto& [k2, c2] : b.terms_) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), k1.get_mpz_t(), k2.get_mpz_t());
            BigInt kernel = (k1 / g) * (k2 / g);
            auto& slot = out.terms_[kernel];
            slot += c1 * c2 * BigRational(g);
            if (slot == 0) out.terms_.erase(kernel);
        }
    }
    return out;
}

double RadicalSum::to_double() const {
    double sum = 0.0;
    for (const auto& [k, c] : terms_) sum += c.get_d() * std::sqrt(k.get_d());
    return sum;
}

namespace {

// Sign of S = sum c_k sqrt(k). Picks a prime p dividing some radicand and
// writes S = P + Q sqrt(p) with P, Q free of p; when P and Q have opposite
// signs the sign of S follows from the sign of P^2 - p Q^2, which involves one
// prime fewer.
int radical_sign(const RadicalSum& s) {
    const auto& terms = s.terms();
    if (terms.empty()) return 0;
    if (terms.size() == 1) return sgn(terms.begin()->second);

    BigInt prime = 0;
    for (const auto& [k, c] : terms) {
        if (k == 1) continue;
        BigInt p = factorize(k).front().first;
        if (prime == 0 || p < prime) prime = p;
    }
    RadicalSum rest, coefficient;
    for (const auto& [k, c] : terms) {
        if (k != 1 && mpz_divisible_p(k.get_mpz_t(), prime.get_mpz_t()))
            coefficient.add_term(c, BigInt(k / prime));
        else
            rest.add_term(c, k);
    }
    int sign_rest = radical_sign(rest);
    int sign_coeff = radical_sign(coefficient);
    if (sign_rest == 0) return sign_coeff;
    if (sign_coeff == 0 || sign_rest == sign_coeff) return sign_rest;
    RadicalSum scaled = coefficient * coefficient * RadicalSum(BigRational(prime));
    int cmp = radical_sign(rest * rest - scaled);
    if (cmp > 0) return sign_rest;
    if (cmp < 0) return sign_coeff;
    return 0;
}

}  // namespace

int RadicalSum::sign() const { return radical_sign(*this); }

int compare(const RadicalSum& a, const RadicalSum& b) { return (a - b).sign(); }

}  // namespace markov
