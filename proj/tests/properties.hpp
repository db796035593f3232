#pragma once

#include "markov/subshift.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace markov::props {

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;  // first failure, empty when ok
};

std::vector<SubshiftSpec> sample_specs();  // ten specs used by the cover and dimension properties

// p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1} on random digit words.
Outcome determinant_identity(int words, std::uint64_t seed);
// Enclosures at three precisions contain the exact value, overlap and shrink.
Outcome enclosure_soundness(int values, std::uint64_t seed);
// Every Lagrange value of dynamical_spectra is also a Markov value.
Outcome lagrange_inside_markov(int instances, std::uint64_t seed);
// Depth n+1 cylinders sit inside exactly one depth n cylinder; total length does not grow.
Outcome cover_nesting(int max_depth);
// Dimension bounds are ordered, the lower one non-decreasing and the upper one non-increasing in depth.
Outcome monotone_dimension_bounds(int max_depth);

}  // namespace markov::props
