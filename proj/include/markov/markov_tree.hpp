#pragma once

#include "markov/bigrational.hpp"
#include "markov/quadsurd.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace markov {

// Solution of x^2 + y^2 + z^2 = 3xyz with 1 <= x <= y <= z.
struct MarkovTriple {
    BigInt x;
    BigInt y;
    BigInt z;

    bool satisfies_equation() const;
    std::string to_string() const;
    friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
};

// Ordered by z, then y, then x.
bool triple_less(const MarkovTriple& a, const MarkovTriple& b);

// Sorts and checks a triple; ValidationError when it is not a Markov triple.
MarkovTriple make_triple(BigInt x, BigInt y, BigInt z);

// Sorted normalizations of (y, z, 3yz - x) and (x, z, 3xz - y), dropping the
// parent and duplicates.
std::vector<MarkovTriple> vieta_children(const MarkovTriple& t);

// Breadth-first closure of the tree from (1,1,1), children pruned at z > z_max
// and, when max_generation >= 0, below that many generations under the root.
std::vector<MarkovTriple> enumerate_triples(const BigInt& z_max, int max_generation = -1);

// Markov numbers (largest coordinates) up to z_max, ascending and distinct.
std::vector<BigInt> markov_numbers(const BigInt& z_max);

// The first `count` Markov numbers.
std::vector<BigInt> smallest_markov_numbers(std::size_t count);

// sqrt(9 - 4/z^2) = sqrt(9z^2 - 4) / z. ValidationError if z is not a Markov number.
QuadSurd lagrange_number(const BigInt& z);

// Distinct triples sharing the same largest coordinate.
struct UnicityCollision {
    BigInt z;
    MarkovTriple first;
    MarkovTriple second;
};
std::vector<UnicityCollision> unicity_report(const BigInt& z_max);

}  // namespace markov
