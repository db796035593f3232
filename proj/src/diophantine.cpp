#include "markov/diophantine.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace markov {

namespace {

// Cylinder of all reals whose expansion starts with `digits` (tail >= 1).
Interval cylinder(std::span<const Digit> digits, mpfr_prec_t precision) {
    auto conv = convergents(FiniteCF{DigitWord(digits.begin(), digits.end())});
    const BigInt& p = conv.back().p;
    const BigInt& q = conv.back().q;
    BigInt p1 = conv.size() > 1 ? conv[conv.size() - 2].p : BigInt(1);
    BigInt q1 = conv.size() > 1 ? conv[conv.size() - 2].q : BigInt(0);
    BigRational a = make_rational(p, q), b = make_rational(p + p1, q + q1);
    return a < b ? Interval(a, b, precision) : Interval(b, a, precision);
}

}  // namespace

ApproximationReport approximation_diagnostics(std::span<const Digit> digits, int n_max, mpfr_prec_t precision) {
    if (n_max < 1) throw ValidationError("n_max must be >= 1");
    validate_digits(digits);
    const std::size_t last = digits.size() - 1;
    if (last < static_cast<std::size_t>(n_max) + 2)
        throw ValidationError("insufficient digits: need at least n_max + 3 partial quotients");

    auto conv = convergents(FiniteCF{DigitWord(digits.begin(), digits.end())});
    const Interval alpha = cylinder(digits, precision);
    const BigRational rep = conv.back().value();
    const Interval root5 = Interval::sqrt_of(5, precision);

    auto error_at = [&](std::size_t k) {
        Interval e = alpha - Interval(conv[k].value(), precision);
        if (mpfr_sgn(e.lower()) >= 0) return e;
        if (mpfr_sgn(e.upper()) <= 0) return -e;
        return hull(Interval(precision), hull(e, -e));
    };
    auto q_squared = [&](std::size_t k) { return Interval(BigInt(conv[k].q * conv[k].q), precision); };

    ApproximationReport report;
    for (int n = 1; n <= n_max; ++n) {
        const auto k = static_cast<std::size_t>(n);
        ApproximationRow row;
        row.n = n;

        Interval err = error_at(k);
        // Identity at the representative alpha* = [a0; ..., aN] of the cylinder.
        BigRational diff = rep - conv[k].value();
        Interval rep_err(BigRational(abs(diff)), precision);
        Interval alpha_next(finite_value(digits.subspan(k + 1)), precision);
        DigitWord reversed{0};
        for (std::size_t i = k; i >= 1; --i) reversed.push_back(digits[i]);
        Interval beta_next(finite_value(reversed), precision);
        Interval product = rep_err * (alpha_next + beta_next) * q_squared(k);
        Interval residual = product - Interval(BigInt(1), precision);
        row.identity_residual = std::max(std::fabs(residual.lower_double()), std::fabs(residual.upper_double()));
        row.scaled_error = (err * q_squared(k)).mid_double();

        auto below = [&](const Interval& value, const Interval& bound) { return value.certainly_less(bound); };
        Interval one(BigInt(1), precision), two(BigInt(2), precision);
        row.half_check = below(err, one / (two * q_squared(k))) || below(error_at(k + 1), one / (two * q_squared(k + 1)));
        Interval hurwitz_bound = one / (root5 * q_squared(k));
        row.hurwitz_check = below(error_at(k - 1), hurwitz_bound) || below(err, hurwitz_bound) ||
                            below(error_at(k + 1), hurwitz_bound);

        report.max_identity_residual = std::max(report.max_identity_residual, row.identity_residual);
        report.all_half_checks = report.all_half_checks && row.half_check;
        report.all_hurwitz_checks = report.all_hurwitz_checks && row.hurwitz_check;
        report.rows.push_back(row);
    }
    return report;
}

double denominator_growth(std::span<const Digit> digits, int depth) {
    if (depth < 1 || static_cast<std::size_t>(depth) >= digits.size())
        throw ValidationError("denominator_growth needs depth + 1 digits");
    BigInt q_prev = 0, q_prev2 = 1;
    for (int i = 0; i <= depth; ++i) {
        BigInt q = BigInt(static_cast<long>(digits[static_cast<std::size_t>(i)])) * q_prev + q_prev2;
        q_prev2 = q_prev;
        q_prev = q;
    }
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, q_prev.get_mpz_t());
    return std::exp((std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2) / depth);
}

namespace {

// log q_depth for alpha = N / 2^bits with N uniform in [1, 2^bits - 1].
double sample_log_denominator(std::mt19937_64& rng, int depth) {
    for (unsigned long bits = 4ul * static_cast<unsigned long>(depth) + 256;; bits *= 2) {
        BigInt numerator = 0;
        for (unsigned long filled = 0; filled < bits; filled += 64) {
            numerator <<= 64;
            std::uint64_t word = rng();
            numerator += BigInt(static_cast<unsigned long>(word >> 32)) * BigInt(4294967296ul) +
                         BigInt(static_cast<unsigned long>(word & 0xffffffffu));
        }
        BigInt denominator = BigInt(1) << bits;
        numerator %= denominator;
        if (numerator == 0) continue;
        // alpha = numerator/denominator = [0; a1, a2, ...]
        BigInt num = denominator, den = numerator, quotient, remainder;
        BigInt q_prev = 1, q_prev2 = 0;  // q_0 = 1, q_{-1} = 0
        int n = 0;
        while (n < depth && den != 0) {
            mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            BigInt q = quotient * q_prev + q_prev2;
            q_prev2 = q_prev;
            q_prev = q;
            num = den;
            den = remainder;
            ++n;
        }
        if (n < depth) continue;  // expansion too short for this many bits; draw again
        long exponent = 0;
        double mantissa = mpz_get_d_2exp(&exponent, q_prev.get_mpz_t());
        return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
    }
}

}  // namespace

double khintchine_levy_estimate(std::int64_t samples, int depth, std::uint64_t seed, unsigned threads) {
    if (samples < 1) throw ValidationError("samples must be >= 1");
    if (depth < 10) throw ValidationError("too shallow: depth must be >= 10");
    std::vector<double> logs(static_cast<std::size_t>(samples));
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
            std::mt19937_64 rng(seq);
            logs[i] = sample_log_denominator(rng, depth);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples)));
    if (threads == 1) {
        worker(0, logs.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (logs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk, end = std::min(logs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    double sum = 0.0;
    for (double v : logs) sum += v;
    return std::exp(sum / static_cast<double>(samples) / depth);
}

double khintchine_levy_constant() { return std::exp(std::numbers::pi * std::numbers::pi / (12.0 * std::numbers::ln2)); }

}  // namespace markov
