#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "markov/biword.hpp"
#include "markov/cover.hpp"
#include "markov/dimension.hpp"
#include "markov/error.hpp"
#include "markov/values.hpp"

#include <cmath>
#include <random>

using namespace markov;

TEST_CASE("single points have dimension 0") {
    SubshiftSpec ones = parse_subshift("alphabet=1");
    CHECK(cover_dim_upper(ones, 4) == 0.0);
    CHECK(cover_dim_lower(ones, 4) == 0.0);
    // Countable set: a single cycle with a transient prefix.
    SubshiftSpec tail = parse_subshift("alphabet=1,2; forbidden=21");
    CHECK(cover_dim_upper(tail, 4) == 0.0);
    CHECK(cover_dim_lower(tail, 4) == 0.0);
}

TEST_CASE("K bounds sit inside (0.353, 0.35792)") {
    double lo = cover_dim_lower(block_set_k1_22(), 8);
    double hi = cover_dim_upper(block_set_k1_22(), 8);
    CHECK(lo > 0.353);
    CHECK(hi < 0.35792);
    CHECK(lo <= hi);
    auto est = cover_dimension(block_set_k1_22(), 8);
    CHECK(est.lower.value() == lo);
    CHECK(est.upper.value() == hi);
}

TEST_CASE("E2 bounds") {
    double lo = cover_dim_lower(full_shift(2), 10);
    double hi = cover_dim_upper(full_shift(2), 10);
    CHECK(hi > 0.53);
    CHECK(hi < 0.56);
    CHECK(lo >= 0.51);
    CHECK(lo <= hi);
    // Regression value (E2 is known to be 0.5312805...).
    CHECK(lo == doctest::Approx(0.5312805).epsilon(1e-5));
    CHECK(hi == doctest::Approx(0.5312805).epsilon(1e-5));
    double point = thermo_dimension(gauss_sft(full_shift(2), 10), 1e-10);
    CHECK(lo <= point);
    CHECK(point <= hi);
}

TEST_CASE("affine systems reproduce the similarity dimension") {
    CHECK(std::abs(thermo_dimension(affine_sft(2, 1.0 / 3), 1e-12) - std::log(2.0) / std::log(3.0)) < 1e-8);
    CHECK(std::abs(thermo_dimension(affine_sft(3, 0.25), 1e-12) - std::log(3.0) / std::log(4.0)) < 1e-8);
    CHECK(std::abs(thermo_dimension(affine_sft(1, 0.5), 1e-12)) < 1e-8);
}

TEST_CASE("thermodynamic estimator errors") {
    CHECK_THROWS_AS(thermo_dimension(affine_sft(2, 1.0 / 3), 0.0), ValidationError);
    CHECK_THROWS_AS(thermo_dimension(affine_sft(5, 0.9), 1e-8), ValidationError);  // root above 1
    WeightedSFT split;
    split.labels = {"a", "b"};
    split.edges = {{0, 0, 0.3}, {0, 1, 0.3}, {1, 1, 0.3}};
    CHECK_THROWS_AS(thermo_dimension(split, 1e-8), ValidationError);
    CHECK_THROWS_AS(gauss_sft(parse_subshift("alphabet=1,2; forbidden=12,21"), 4), ValidationError);
}

TEST_CASE("thermodynamic estimate for X") {
    double x = thermo_dimension(gauss_sft(cantor_set_x(), 8), 1e-8);
    CHECK(std::abs(x - 0.4816) <= 0.005);
    CHECK(cover_dim_lower(cantor_set_x(), 8) <= x);
    CHECK(x <= cover_dim_upper(cantor_set_x(), 8));
}

TEST_CASE("maximal f over {1,2} is sqrt(12) at the alternating word") {
    AlgebraicValue top = f_value(parse_biword("(2,1)* | (2,1)*"));
    CHECK(compare(top, AlgebraicValue(parse_quad_surd("2*sqrt(3)"))) == 0);
    CHECK(compare(markov_value(parse_biword("(2,1)* | (2,1)*")), AlgebraicValue(parse_quad_surd("sqrt(12)"))) == 0);
}

TEST_CASE("dimension function lower bound") {
    CHECK(dimension_function_lower(parse_quad_surd("2.2"), 8) == 0.0);
    CHECK(dimension_function_lower(QuadSurd(3L), 8) == 0.0);
    CHECK(dimension_function_lower(QuadSurd(3L), 12) == 0.0);
    CHECK(dimension_function_lower(parse_quad_surd("sqrt(12)"), 4) == 1.0);
    CHECK_FALSE(certified_subshift(parse_quad_surd("2.2"), 8).has_value());
    double prev = 0;
    for (const char* t : {"2.2", "2.9", "3", "3.05", "3.1", "3.2", "3.3", "3.4", "sqrt(12)"}) {
        double d = dimension_function_lower(parse_quad_surd(t), 8);
        CAPTURE(t);
        CHECK(d >= prev);
        CHECK(d <= 1.0);
        prev = d;
    }
    CHECK(dimension_function_lower(parse_quad_surd("3.1"), 8) > 0.5);
}

TEST_CASE("certified subshifts only carry values below t") {
    std::mt19937_64 rng(3);
    for (const char* text : {"3.1", "3.2", "3.3"}) {
        QuadSurd t = parse_quad_surd(text);
        auto y = certified_subshift(t, 8);
        REQUIRE(y.has_value());
        NormalizedSpec ny = validate(*y);
        std::vector<DigitWord> periods;
        for (int len = 1; len <= 12; ++len)
            for (const auto& w : admissible_words(ny, len))
                if (ny.periodic_admissible(w)) periods.push_back(w);
        REQUIRE(!periods.empty());
        std::shuffle(periods.begin(), periods.end(), rng);
        if (periods.size() > 60) periods.resize(60);
        for (const auto& w : periods) {
            CAPTURE(text);
            CHECK(compare(markov_value(BiWord::periodic(w)), AlgebraicValue(t)) <= 0);
        }
    }
}
