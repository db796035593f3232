#include "markov/continued_fraction.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <map>

namespace markov {

void validate_digits(std::span<const Digit> digits) {
    if (digits.empty()) throw ValidationError("invalid word: empty continued fraction");
    if (digits[0] < 0) throw ValidationError("invalid word: negative leading partial quotient");
    for (std::size_t i = 1; i < digits.size(); ++i)
        if (digits[i] < 1) throw ValidationError("invalid word: partial quotient < 1 at index " + std::to_string(i));
}

std::vector<Convergent> convergents(const FiniteCF& w) {
    validate_digits(w.digits);
    std::vector<Convergent> out;
    out.reserve(w.digits.size());
    BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
    for (Digit a : w.digits) {
        BigInt p = BigInt(static_cast<long>(a)) * p_prev + p_prev2;
        BigInt q = BigInt(static_cast<long>(a)) * q_prev + q_prev2;
        out.push_back({p, q});
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
    return out;
}

BigRational finite_value(std::span<const Digit> digits) {
    if (digits.empty()) throw ValidationError("invalid word: empty continued fraction");
    BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
    for (Digit a : digits) {
        BigInt p = BigInt(static_cast<long>(a)) * p_prev + p_prev2;
        BigInt q = BigInt(static_cast<long>(a)) * q_prev + q_prev2;
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
    return make_rational(p_prev, q_prev);
}

namespace {

std::size_t primitive_length(const DigitWord& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = w[i] == w[i - len];
        if (ok) return len;
    }
    return n;
}

}  // namespace

PeriodicCF::PeriodicCF(DigitWord preperiod, DigitWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw ValidationError("periodic continued fraction with empty period");
    for (Digit a : period_)
        if (a < 1) throw ValidationError("invalid word: period digit < 1");
    for (std::size_t i = 1; i < preperiod_.size(); ++i)
        if (preperiod_[i] < 1) throw ValidationError("invalid word: preperiod digit < 1 at index " + std::to_string(i));
    period_.resize(primitive_length(period_));
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        preperiod_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

DigitWord PeriodicCF::prefix(std::size_t n) const {
    DigitWord out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(i < preperiod_.size() ? preperiod_[i] : period_[(i - preperiod_.size()) % period_.size()]);
    return out;
}

std::string PeriodicCF::to_string() const {
    std::string out = "[";
    auto digits = [](const DigitWord& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s;
    };
    out += digits(preperiod_);
    if (!preperiod_.empty()) out += ",";
    return out + "(" + digits(period_) + ")*]";
}

QuadSurd attach_tail(std::span<const Digit> digits, const QuadSurd& tail) {
    BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
    for (Digit a : digits) {
        BigInt p = BigInt(static_cast<long>(a)) * p_prev + p_prev2;
        BigInt q = BigInt(static_cast<long>(a)) * q_prev + q_prev2;
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
    if (digits.empty()) return tail;
    QuadSurd num = QuadSurd(BigRational(p_prev)) * tail + QuadSurd(BigRational(p_prev2));
    QuadSurd den = QuadSurd(BigRational(q_prev)) * tail + QuadSurd(BigRational(q_prev2));
    return num / den;
}

QuadSurd periodic_value(const PeriodicCF& cf) {
    // The purely periodic part y satisfies y = (P y + P') / (Q y + Q'), i.e.
    // Q y^2 + (Q' - P) y - P' = 0, and y > 1 is the positive root.
    auto conv = convergents(FiniteCF{cf.period()});
    BigInt P = conv.back().p, Q = conv.back().q;
    BigInt P1 = conv.size() > 1 ? conv[conv.size() - 2].p : BigInt(1);
    BigInt Q1 = conv.size() > 1 ? conv[conv.size() - 2].q : BigInt(0);
    BigInt lin = P - Q1;
    // Divide out the content so the radicand is the primitive discriminant;
    // the raw one grows with the period and is costly to factor.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), lin.get_mpz_t(), Q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), P1.get_mpz_t());
    lin /= g;
    Q /= g;
    P1 /= g;
    QuadSurd y(lin, 1, lin * lin + 4 * Q * P1, 2 * Q);
    return attach_tail(cf.preperiod(), y);
}

PeriodicCF surd_cf(const QuadSurd& s) {
    if (s.is_rational()) throw ValidationError("surd_cf requires an irrational surd, got " + s.to_string());
    // Write s = (P + sqrt(D)) / Q with Q | D - P^2 and iterate the complete quotients.
    BigInt P, Q, D = s.b() * s.b() * s.c() * s.c() * s.d();
    if (s.b() > 0) {
        P = s.a() * s.c();
        Q = s.c() * s.c();
    } else {
        P = -s.a() * s.c();
        Q = -s.c() * s.c();
    }
    const BigInt root = isqrt(D);
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    DigitWord digits;
    for (;;) {
        auto key = std::make_pair(P, Q);
        if (auto it = seen.find(key); it != seen.end()) {
            DigitWord pre(digits.begin(), digits.begin() + static_cast<long>(it->second));
            DigitWord period(digits.begin() + static_cast<long>(it->second), digits.end());
            return PeriodicCF(pre, period);
        }
        seen.emplace(key, digits.size());
        // sqrt(D) is irrational: floor((P + sqrt D)/Q) from the integer root alone.
        BigInt a, num = Q > 0 ? BigInt(P + root) : BigInt(P + root + 1);
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        if (!a.fits_slong_p()) throw ResourceError("partial quotient exceeds 64 bits");
        digits.push_back(a.get_si());
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

BigInt fibonacci(unsigned n) {
    BigInt out;
    mpz_fib_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace markov
