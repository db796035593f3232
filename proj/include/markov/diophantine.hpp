#pragma once

#include "markov/continued_fraction.hpp"
#include "markov/interval.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace markov {

struct ApproximationRow {
    int n = 0;
    // Upper bound on | |alpha - p_n/q_n| (alpha_{n+1} + beta_{n+1}) q_n^2 - 1 |.
    double identity_residual = 0.0;
    // q_n^2 |alpha - p_n/q_n| (midpoint of its enclosure).
    double scaled_error = 0.0;
    // One of p_n/q_n, p_{n+1}/q_{n+1} is within 1/(2q^2) of alpha.
    bool half_check = false;
    // Some k in {n-1, n, n+1} has |alpha - p_k/q_k| < 1/(sqrt5 q_n^2).
    bool hurwitz_check = false;
};

struct ApproximationReport {
    std::vector<ApproximationRow> rows;
    double max_identity_residual = 0.0;
    bool all_half_checks = true;
    bool all_hurwitz_checks = true;
};

// alpha is known through the digits [a0; a1, ..., aN] of its expansion: it lies
// in the corresponding cylinder, so every quantity is enclosed over that
// cylinder. The identity residual is evaluated at the representative
// [a0; ...; aN]; the two checks hold over the whole cylinder. Rows cover n = 1 .. n_max. The checks are reported as passed only
// when the enclosures certify them. Requires N >= n_max + 2.
ApproximationReport approximation_diagnostics(std::span<const Digit> digits, int n_max,
                                              mpfr_prec_t precision = 256);

// q_n^(1/n) at n = depth for the given digits.
double denominator_growth(std::span<const Digit> digits, int depth);

// Monte Carlo estimate of lim q_n^(1/n): each sample draws a uniform dyadic
// alpha in (0,1) with enough random bits to fix `depth` partial quotients and
// expands it. The estimate is exp(mean(log q_depth) / depth). Samples are
// seeded from (seed, sample index), so the value does not depend on `threads`.
double khintchine_levy_estimate(std::int64_t samples, int depth, std::uint64_t seed,
                                unsigned threads = 1);

// exp(pi^2 / (12 ln 2)).
double khintchine_levy_constant();

}  // namespace markov
