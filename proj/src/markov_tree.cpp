#include "markov/markov_tree.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <deque>

namespace markov {

bool MarkovTriple::satisfies_equation() const {
    return x >= 1 && x <= y && y <= z && x * x + y * y + z * z == 3 * x * y * z;
}

std::string MarkovTriple::to_string() const {
    return "(" + x.get_str() + "," + y.get_str() + "," + z.get_str() + ")";
}

bool triple_less(const MarkovTriple& a, const MarkovTriple& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

MarkovTriple make_triple(BigInt x, BigInt y, BigInt z) {
    if (x > y) swap(x, y);
    if (y > z) swap(y, z);
    if (x > y) swap(x, y);
    MarkovTriple t{x, y, z};
    if (!t.satisfies_equation()) throw ValidationError("not a Markov triple: " + t.to_string());
    return t;
}

std::vector<MarkovTriple> vieta_children(const MarkovTriple& t) {
    if (!t.satisfies_equation()) throw ValidationError("not a Markov triple: " + t.to_string());
    std::vector<MarkovTriple> out;
    for (auto candidate : {make_triple(t.y, t.z, 3 * t.y * t.z - t.x), make_triple(t.x, t.z, 3 * t.x * t.z - t.y)}) {
        if (candidate == t) continue;
        if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
        out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

std::vector<MarkovTriple> enumerate_triples(const BigInt& z_max, int max_generation) {
    if (z_max < 1) throw ValidationError("z_max must be >= 1");
    std::vector<MarkovTriple> out;
    std::deque<std::pair<MarkovTriple, int>> queue{{MarkovTriple{1, 1, 1}, 0}};
    while (!queue.empty()) {
        auto [t, generation] = std::move(queue.front());
        queue.pop_front();
        if (max_generation < 0 || generation < max_generation)
            for (auto& child : vieta_children(t))
                if (child.z <= z_max) queue.emplace_back(child, generation + 1);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

std::vector<BigInt> markov_numbers(const BigInt& z_max) {
    std::vector<BigInt> out;
    for (const auto& t : enumerate_triples(z_max))
        if (out.empty() || out.back() != t.z) out.push_back(t.z);
    return out;
}

std::vector<BigInt> smallest_markov_numbers(std::size_t count) {
    for (BigInt bound = 64;; bound *= 64) {
        auto numbers = markov_numbers(bound);
        if (numbers.size() >= count) {
            numbers.resize(count);
            return numbers;
        }
    }
}

QuadSurd lagrange_number(const BigInt& z) {
    if (z < 1) throw ValidationError("lagrange_number needs z >= 1");
    auto numbers = markov_numbers(z);
    if (numbers.empty() || numbers.back() != z) throw ValidationError(z.get_str() + " is not a Markov number");
    return QuadSurd(0, 1, 9 * z * z - 4, z);
}

std::vector<UnicityCollision> unicity_report(const BigInt& z_max) {
    auto triples = enumerate_triples(z_max);
    std::vector<UnicityCollision> out;
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size() && triples[j].z == triples[i].z; ++j)
            out.push_back({triples[i].z, triples[i], triples[j]});
    return out;
}

}  // namespace markov
