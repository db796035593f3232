#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "markov/error.hpp"
#include "markov/markov_tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

using namespace markov;

namespace {

using Triple = std::tuple<long, long, long>;

// Every solution with x <= y <= z <= z_max, by direct search over (y, z):
// x is a root of x^2 - 3yz x + (y^2 + z^2) = 0.
std::set<Triple> brute_force(long z_max) {
    std::set<Triple> out;
    for (long z = 1; z <= z_max; ++z) {
        for (long y = 1; y <= z; ++y) {
            long b = 3 * y * z, c = y * y + z * z;
            long disc = b * b - 4 * c;
            if (disc < 0) continue;
            long r = std::lround(std::sqrt(static_cast<double>(disc)));
            for (long s = std::max(0L, r - 2); s <= r + 2; ++s) {
                if (s * s != disc || (b - s) % 2 != 0) continue;
                long x = (b - s) / 2;
                if (x >= 1 && x <= y) out.emplace(x, y, z);
            }
        }
    }
    return out;
}

std::set<Triple> as_set(const std::vector<MarkovTriple>& v) {
    std::set<Triple> out;
    for (const auto& t : v) out.emplace(t.x.get_si(), t.y.get_si(), t.z.get_si());
    return out;
}

}  // namespace

TEST_CASE("triples validate and sort") {
    auto t = make_triple(BigInt(5), BigInt(1), BigInt(2));
    CHECK(t.x == 1);
    CHECK(t.y == 2);
    CHECK(t.z == 5);
    CHECK(t.to_string() == "(1,2,5)");
    CHECK_THROWS_AS(make_triple(BigInt(1), BigInt(2), BigInt(3)), ValidationError);
    CHECK_THROWS_AS(make_triple(BigInt(0), BigInt(0), BigInt(0)), ValidationError);
}

TEST_CASE("vieta children") {
    auto root = vieta_children(make_triple(BigInt(1), BigInt(1), BigInt(1)));
    REQUIRE(root.size() == 1);
    CHECK(root[0] == make_triple(BigInt(1), BigInt(1), BigInt(2)));
    auto c = vieta_children(make_triple(BigInt(1), BigInt(5), BigInt(13)));
    REQUIRE(c.size() == 2);
    std::set<Triple> got = as_set(c);
    CHECK(got.count({1, 13, 34}) == 1);
    CHECK(got.count({5, 13, 194}) == 1);
}

TEST_CASE("first four generations below z = 433") {
    std::set<Triple> four_generations = {{1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29},
                               {1, 13, 34}, {5, 13, 194}, {2, 29, 169}, {5, 29, 433}};
    CHECK(as_set(enumerate_triples(BigInt(433), 4)) == four_generations);
    auto all = as_set(enumerate_triples(BigInt(433)));
    for (const auto& t : four_generations) CHECK(all.count(t) == 1);
    // The z cut alone also keeps the deeper branch along the Fibonacci side.
    CHECK(all.size() == 11);
    CHECK(all.count({1, 34, 89}) == 1);
    CHECK(all.count({1, 89, 233}) == 1);
}

TEST_CASE("enumeration agrees with brute force up to 1000") {
    auto tree = enumerate_triples(BigInt(1000));
    for (const auto& t : tree) CHECK(t.satisfies_equation());
    CHECK(std::is_sorted(tree.begin(), tree.end(), triple_less));
    CHECK(as_set(tree) == brute_force(1000));
}

TEST_CASE("markov numbers") {
    std::vector<BigInt> expected;
    for (long z : {1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985}) expected.emplace_back(z);
    CHECK(markov_numbers(BigInt(1000)) == expected);
    auto first = smallest_markov_numbers(13);
    CHECK(first == expected);
    CHECK(smallest_markov_numbers(50).size() == 50);
}

TEST_CASE("lagrange numbers increase to 3") {
    CHECK(lagrange_number(BigInt(1)) == QuadSurd::sqrt(BigInt(5)));
    CHECK(lagrange_number(BigInt(2)) == QuadSurd::sqrt(BigInt(8)));
    CHECK(lagrange_number(BigInt(5)) == parse_quad_surd("sqrt(221)/5"));
    CHECK_THROWS_AS(lagrange_number(BigInt(3)), ValidationError);
    auto zs = smallest_markov_numbers(50);
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) CHECK(lagrange_number(zs[i]) < lagrange_number(zs[i + 1]));
    for (const auto& z : zs) {
        QuadSurd l = lagrange_number(z);
        CHECK(l < QuadSurd(3L));
        QuadSurd gap = QuadSurd(3L) - l;
        CHECK(gap < QuadSurd(make_rational(BigInt(2), BigInt(z * z))));
    }
}

TEST_CASE("unicity scan finds no collision") {
    CHECK(unicity_report(BigInt(100000)).empty());
}
