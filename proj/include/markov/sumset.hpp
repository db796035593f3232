#pragma once

#include "markov/bigrational.hpp"
#include "markov/cover.hpp"
#include "markov/quadsurd.hpp"
#include "markov/subshift.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace markov {

// Outer enclosure of K1 + K2: merged pairwise sums of cover intervals.
struct SumCover {
    int depth1 = 0;
    int depth2 = 0;
    std::vector<std::pair<BigRational, BigRational>> intervals;  // disjoint, sorted

    bool contains(const BigRational& x) const;
};

SumCover minkowski_sum_cover(const IntervalCover& c1, const IntervalCover& c2,
                             std::size_t budget = kDefaultIntervalBudget);

// Newhouse gap lemma, sum form: when tau1 * tau2 >= 1 and each convex hull is
// at least as long as every gap of the other set, K1 + K2 = I1 + I2.
struct GapLemmaCertificate {
    bool holds = false;
    double thickness1 = 0;
    double thickness2 = 0;
    double max_gap1 = 0;  // upper bounds
    double max_gap2 = 0;
    QuadSurd hull1_lo, hull1_hi, hull2_lo, hull2_hi;
    QuadSurd sum_lo, sum_hi;  // the certified interval when holds
    std::string reason;
};

GapLemmaCertificate gap_lemma_certificate(const SubshiftSpec& spec1, const SubshiftSpec& spec2, int depth);

// Density of K + K inside its hull, witnessed by pairwise sums of one genuine
// point per depth-n cylinder (the least point of the set in that cylinder).
// Sums are bucketed on a grid of width `grid`; max_gap is an upper bound for
// the largest gap between consecutive witness sums (and the hull endpoints).
struct DensityReport {
    int depth = 0;
    std::size_t interval_count = 0;
    double grid = 0;
    double eps = 0;
    double max_gap = 0;
    bool pass = false;
    QuadSurd target_lo, target_hi;
};

constexpr double kDefaultDensityGrid = 1e-6;

DensityReport sum_density_check(const SubshiftSpec& spec, int depth, double eps, double grid = kDefaultDensityGrid,
                                std::size_t budget = 50'000'000);
// C(4) + C(4) = [sqrt(2) - 1, 4 (sqrt(2) - 1)].
DensityReport hall_density_check(int depth, double eps, double grid = kDefaultDensityGrid);

// Witness points (least point of the set in each admissible depth-n cylinder), unsorted.
std::vector<double> cylinder_representatives(const SubshiftSpec& spec, int depth,
                                             std::size_t budget = kDefaultIntervalBudget);

}  // namespace markov
