#pragma once

#include "markov/bigrational.hpp"
#include "markov/continued_fraction.hpp"
#include "markov/interval.hpp"
#include "markov/quadsurd.hpp"
#include "markov/subshift.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace markov {

constexpr std::size_t kDefaultIntervalBudget = 10'000'000;

// Full continued-fraction cylinder of [0; word, ...].
struct CoverInterval {
    BigRational lo;
    BigRational hi;
    DigitWord word;
};

// Sorted by left endpoint; interiors are pairwise disjoint (siblings with
// consecutive digits share an endpoint).
struct IntervalCover {
    int depth = 0;
    std::vector<CoverInterval> intervals;

    BigRational total_length() const;
};

// Closed cylinder {[0; a1, ..., an, t] : t >= 1}: endpoints p_n/q_n and
// (p_n + p_{n-1}) / (q_n + q_{n-1}), sorted.
std::pair<BigRational, BigRational> cylinder(std::span<const Digit> word);

// Admissible words of the given length in lexicographic order.
std::vector<DigitWord> admissible_words(const NormalizedSpec& spec, int length,
                                        std::size_t budget = kDefaultIntervalBudget);

IntervalCover cylinder_cover(const SubshiftSpec& spec, int depth, std::size_t budget = kDefaultIntervalBudget);

// CSV with columns depth,index,word,lo,hi (exact fractions).
std::string cover_to_csv(const IntervalCover& cover);

// Convex hull of {[0; a1, a2, ...] : a admissible from the state}. The extremes
// are attained by eventually periodic sequences and are exact.
struct StateHull {
    PeriodicCF lo_cf;
    PeriodicCF hi_cf;
    QuadSurd lo;
    QuadSurd hi;
};

std::vector<StateHull> state_hulls(const NormalizedSpec& spec);

// Hull of {[0; word, tail] : tail admissible after reading `word` from `state`}
// given the hull of the tails, as doubles (rounding error ~1e-16 relative).
std::pair<double, double> word_hull(std::span<const Digit> word, double tail_lo, double tail_hi);

// Lower bound for the Newhouse thickness of the Gauss-Cantor set, from the
// presentation that removes gaps level by level (children of each admissible
// prefix, cut at their restricted hulls). Parents shorter than `depth` are
// evaluated exactly; deeper parents are bounded through the last `depth`
// digits. Non-decreasing in depth. ValidationError when the set is a single
// point or depth < 1.
double thickness_bound(const SubshiftSpec& spec, int depth);

// Largest gap of the set: exact over gaps created by parents shorter than
// `depth`, deeper gaps bounded by the longest depth-`depth` full cylinder.
// Returned as an upper bound.
double max_gap_upper(const SubshiftSpec& spec, int depth);

}  // namespace markov
