#pragma once

#include "markov/continued_fraction.hpp"
#include "markov/quadsurd.hpp"
#include "markov/subshift.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace markov {

struct DimensionEstimate {
    std::optional<double> lower;  // certified
    std::optional<double> upper;  // certified
    std::optional<double> point;  // heuristic
    std::string method;
    int depth = 0;
};

// Graph with positive contraction ratios on its edges; the dimension is the s
// where the spectral radius of [sum over edges i->j of ratio^s] equals 1.
struct WeightedSFT {
    struct Edge {
        std::size_t from;
        std::size_t to;
        double ratio;  // in (0, 1)
    };
    std::vector<std::string> labels;  // one per state
    std::vector<Edge> edges;

    std::size_t state_count() const { return labels.size(); }
};

constexpr std::size_t kDefaultGraphBudget = 2'000'000;

// Certified bounds from the graph-directed system on blocks of `depth` digits:
// each block carries the exact hull of the set it generates, and the inverse
// Gauss branches are bounded above (upper) or below (lower) on those hulls.
// Both return 0 for sets of zero entropy (finite or countable).
double cover_dim_upper(const SubshiftSpec& spec, int depth, std::size_t budget = kDefaultGraphBudget);
double cover_dim_lower(const SubshiftSpec& spec, int depth, std::size_t budget = kDefaultGraphBudget);
DimensionEstimate cover_dimension(const SubshiftSpec& spec, int depth, std::size_t budget = kDefaultGraphBudget);

// Block graph of word length m with each ratio taken at the midpoint of the
// target hull; transient blocks are dropped. ValidationError when what remains
// is not strongly connected.
WeightedSFT gauss_sft(const SubshiftSpec& spec, int word_len, std::size_t budget = kDefaultGraphBudget);
// One state, `branches` loops of the given ratio.
WeightedSFT affine_sft(int branches, double ratio);

// Perron-root bisection on [0, 1]. ValidationError when the graph is not
// strongly connected, when tol <= 0, or when the root is not bracketed.
double thermo_dimension(const WeightedSFT& sft, double tol);

// Largest subshift over `alphabet` whose windows of length `word_len` all have
// sup f <= t over every continuation (certified exactly, centre of the window
// as origin). Empty optional when no window qualifies.
std::optional<SubshiftSpec> certified_subshift(const QuadSurd& t, int word_len, const std::vector<Digit>& alphabet = {1, 2});

// min(1, 2 * cover_dim_lower) of certified_subshift: a lower bound for d(t).
double dimension_function_lower(const QuadSurd& t, int word_len, int dim_depth = 8,
                                const std::vector<Digit>& alphabet = {1, 2});

}  // namespace markov
