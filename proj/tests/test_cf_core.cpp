#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "markov/algebraic.hpp"
#include "markov/bigrational.hpp"
#include "markov/biword.hpp"
#include "markov/continued_fraction.hpp"
#include "markov/diophantine.hpp"
#include "markov/error.hpp"
#include "markov/interval.hpp"
#include "markov/quadsurd.hpp"
#include "markov/radical.hpp"
#include "markov/values.hpp"

#include <cmath>
#include <random>

using namespace markov;

namespace {

QuadSurd qs(const char* s) { return parse_quad_surd(s); }

DigitWord random_word(std::mt19937_64& rng, std::size_t n, Digit max_digit) {
    std::uniform_int_distribution<Digit> d(1, max_digit);
    DigitWord w(n);
    for (auto& x : w) x = d(rng);
    return w;
}

}  // namespace

TEST_CASE("rationals are canonical and parse exactly") {
    CHECK(to_string(make_rational(BigInt(6), BigInt(-4))) == "-3/2");
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), ValidationError);
    CHECK(parse_rational("3/6") == BigRational(1, 2));
    CHECK(parse_rational("-0.25") == BigRational(-1, 4));
    CHECK(parse_rational("7") == BigRational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("square-free split and factorization") {
    auto s = square_free_split(BigInt(72));  // 72 = 6^2 * 2
    CHECK(s.root == 6);
    CHECK(s.kernel == 2);
    auto f = factorize(BigInt(151905));  // 3^1 * 5 * 13 * 19 * 41
    BigInt product = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) product *= p;
    CHECK(product == 151905);
}

TEST_CASE("quadratic surds normalise and print") {
    QuadSurd x(BigInt(2), BigInt(2), BigInt(8), BigInt(4));  // (2 + 2 sqrt 8)/4
    CHECK(x.to_string() == "(1+2*sqrt(2))/2");
    CHECK(QuadSurd::sqrt(BigInt(8)).to_string() == "2*sqrt(2)");
    CHECK(QuadSurd::sqrt(BigInt(9)).is_rational());
    CHECK(qs("sqrt(221)/5").to_string() == "sqrt(221)/5");
    CHECK(qs("(1+sqrt(5))/2") * qs("(1+sqrt(5))/2") == qs("(3+sqrt(5))/2"));
    CHECK(qs("sqrt(2)").reciprocal() == qs("sqrt(2)/2"));
    CHECK(qs("(1+sqrt(5))/2").floor() == 1);
    CHECK(qs("-sqrt(2)").floor() == -2);
    CHECK_THROWS_AS(qs("sqrt(2)") + qs("sqrt(3)"), ValidationError);
}

TEST_CASE("exact comparison across radicands") {
    // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 < 10
    CHECK(compare(AlgebraicValue(qs("sqrt(2)"), qs("sqrt(3)")), AlgebraicValue(qs("sqrt(10)"))) < 0);
    CHECK(qs("sqrt(2)") < QuadSurd(BigRational(3, 2)));
    // Equal values written differently compare equal exactly.
    CHECK(compare(AlgebraicValue(qs("sqrt(8)"), qs("sqrt(2)")), AlgebraicValue(qs("3*sqrt(2)"))) == 0);
    // 1e-30-close but distinct rationals are separated.
    BigRational tiny = parse_rational("0.000000000000000000000000000001");
    CHECK(compare(AlgebraicValue(qs("sqrt(2)")) + tiny, AlgebraicValue(qs("sqrt(2)"))) > 0);
}

TEST_CASE("convergents") {
    auto c = convergents(FiniteCF{{1, 1, 1, 1}});
    REQUIRE(c.size() == 4);
    CHECK(c[0].value() == BigRational(1));
    CHECK(c[1].value() == BigRational(2));
    CHECK(c[2].value() == BigRational(3, 2));
    CHECK(c[3].value() == BigRational(5, 3));
    auto d = convergents(FiniteCF{{2, 2, 2}});
    CHECK(d[0].value() == BigRational(2));
    CHECK(d[1].value() == BigRational(5, 2));
    CHECK(d[2].value() == BigRational(12, 5));
    auto e = convergents(FiniteCF{{0, 2}});
    CHECK(e[0].value() == BigRational(0));
    CHECK(e[1].value() == BigRational(1, 2));
    CHECK_THROWS_AS(convergents(FiniteCF{{1, 0}}), ValidationError);
    CHECK_THROWS_AS(convergents(FiniteCF{{}}), ValidationError);
    CHECK(finite_value(DigitWord{0, 1, 2}) == BigRational(2, 3));
}

TEST_CASE("periodic values and expansions") {
    CHECK(periodic_value(PeriodicCF({}, {1})) == qs("(1+sqrt(5))/2"));
    CHECK(periodic_value(PeriodicCF({0}, {2})) == qs("sqrt(2)-1"));
    CHECK(periodic_value(PeriodicCF({1}, {2})) == qs("sqrt(2)"));
    CHECK(surd_cf(qs("sqrt(2)")) == PeriodicCF({1}, {2}));
    CHECK(surd_cf(qs("(1+sqrt(5))/2")) == PeriodicCF({}, {1}));
    CHECK(surd_cf(qs("sqrt(3)")) == PeriodicCF({1}, {1, 2}));
    CHECK_THROWS_AS(surd_cf(QuadSurd(BigRational(3, 2))), ValidationError);
    // Canonical form: non-primitive period and rollable preperiod are reduced.
    CHECK(PeriodicCF({1, 2}, {1, 2}) == PeriodicCF({}, {1, 2}));
    CHECK(PeriodicCF({3}, {2, 2}) == PeriodicCF({3}, {2}));
    CHECK(PeriodicCF({0}, {2}).to_string() == "[0,(2)*]");
}

TEST_CASE("round trip periodic_value o surd_cf on random surds") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> small(-40, 40), rad(2, 300), den(1, 30);
    int checked = 0;
    while (checked < 200) {
        long d = rad(rng), b = small(rng);
        if (b == 0) continue;
        QuadSurd s(BigInt(small(rng)), BigInt(b), BigInt(d), BigInt(den(rng)));
        if (s.is_rational()) continue;
        CHECK(periodic_value(surd_cf(s)) == s);
        ++checked;
    }
}

TEST_CASE("biword parsing round-trips") {
    for (const char* text : {"(1)* | (2,2,1,1)*", "(2)* 1,2,1,1,2,2,2,1 | 2 (1,1,2,2,2,1,2)*", "(3)* 5 | 4,4 (1,2)*"}) {
        BiWord w = parse_biword(text);
        CHECK(parse_biword(w.to_string()) == w);
    }
    BiWord w = parse_biword("(1)* 3 | 4 (2)*");
    CHECK(w.at(0) == 4);
    CHECK(w.at(-1) == 3);
    CHECK(w.at(-5) == 1);
    CHECK(w.at(7) == 2);
    CHECK(w.shifted(-1).at(0) == 3);
    CHECK_THROWS_AS(parse_biword("(0)* | (1)*"), ValidationError);
    CHECK_THROWS_AS(parse_biword("(1)* (1)*"), ValidationError);
    CHECK_THROWS_AS(parse_biword("()* | (1)*"), ValidationError);
}

TEST_CASE("f values") {
    CHECK(compare(f_value(parse_biword("(1)* | (1)*")), AlgebraicValue(qs("sqrt(5)"))) == 0);
    AlgebraicValue b = f_value(parse_biword("(2,1,1,2,2,2,1)* | 2 (1,1,2,2,2,1,2)*"));
    CHECK(compare(b, AlgebraicValue(qs("sqrt(18229)/41"))) == 0);
    CHECK(b.decimal(10) == "3.2930442439");
    AlgebraicValue big = f_value(parse_biword(
        "(2,1,1,2,1,1,2,1,2,2,2,1)* 2,2,1,2,1,1,2,2,2,1,2,1,1,2,2,2,1 | 2,1 (1,2,2,2,1,2,1,1,2,1,1,2)*"));
    CHECK(big.decimal(10) == "3.2930444814");
}

TEST_CASE("markov and lagrange values") {
    CHECK(compare(markov_value(parse_biword("(1)* | (1)*")), AlgebraicValue(qs("sqrt(5)"))) == 0);
    CHECK(compare(markov_value(parse_biword("(2)* | (2)*")), AlgebraicValue(qs("2*sqrt(2)"))) == 0);
    CHECK(compare(markov_value(parse_biword("(2,2,1,1)* | (2,2,1,1)*")), AlgebraicValue(qs("sqrt(221)/5"))) == 0);
    CHECK(compare(lagrange_value(parse_biword("(1)* | (1)*")), AlgebraicValue(qs("sqrt(5)"))) == 0);
    CHECK(compare(lagrange_value(parse_biword("(1)* 3 | (1)*")), AlgebraicValue(qs("sqrt(5)"))) == 0);
    CHECK(compare(lagrange_value(parse_biword("(1,2)* 3,3 | (2,2,1,1)*")), AlgebraicValue(qs("sqrt(221)/5"))) == 0);
    // An inserted 3 raises the sup above the tails.
    CHECK(compare(markov_value(parse_biword("(1)* 3 | (1)*")), AlgebraicValue(qs("sqrt(5)"))) > 0);
    CHECK(markov_value(parse_biword("(1)* 3 | (1)*")).is_exact());
}

TEST_CASE("markov value invariants on random eventually periodic words") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(0, 4), plen(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        BiWord w(random_word(rng, static_cast<std::size_t>(plen(rng)), 3), random_word(rng, static_cast<std::size_t>(len(rng)), 3),
                 random_word(rng, static_cast<std::size_t>(len(rng)), 3), random_word(rng, static_cast<std::size_t>(plen(rng)), 3));
        AlgebraicValue m = markov_value(w);
        AlgebraicValue l = lagrange_value(w);
        CHECK(compare(m, l) >= 0);
        CHECK(compare(m, f_value(w)) >= 0);
        auto orbit = periodic_orbit_values(w.right_period());
        for (const auto& v : orbit) CHECK(compare(l, v) >= 0);
        // Shift invariance of the value.
        for (long long n : {-3LL, -1LL, 2LL, 5LL}) {
            CHECK(compare(markov_value(w.shifted(n)), m) == 0);
            CHECK(compare(lagrange_value(w.shifted(n)), l) == 0);
        }
    }
}

TEST_CASE("continuity modulus bounds f differences") {
    CHECK(continuity_modulus(2) == BigRational(2, 1));   // 2/(F1 F2)
    CHECK(continuity_modulus(5) == BigRational(2, 15));  // 2/(F4 F5) = 2/(3*5)
    CHECK_THROWS_AS(continuity_modulus(1), ValidationError);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(trial % 6);
        DigitWord middle = random_word(rng, 2 * k + 1, 3);
        auto make = [&](DigitWord lp, DigitWord rp) {
            DigitWord left(middle.begin(), middle.begin() + k), right(middle.begin() + k, middle.end());
            return BiWord(lp, left, right, rp);
        };
        BiWord u = make(random_word(rng, 2, 4), random_word(rng, 3, 4));
        BiWord v = make(random_word(rng, 1, 4), random_word(rng, 2, 4));
        Interval diff = f_value(u).enclosure(256) - f_value(v).enclosure(256);
        double bound = continuity_modulus(k).get_d();
        CHECK(std::max(std::abs(diff.lower_double()), std::abs(diff.upper_double())) <= bound);
    }
}

TEST_CASE("approximation diagnostics") {
    DigitWord golden(24, 1);
    auto rep = approximation_diagnostics(golden, 20);
    auto deep = approximation_diagnostics(DigitWord(60, 1), 20);
    CHECK(deep.rows.back().scaled_error == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(rep.max_identity_residual < 1e-30);
    CHECK(rep.all_half_checks);
    CHECK(rep.all_hurwitz_checks);
    CHECK_THROWS_AS(approximation_diagnostics(golden, 23), ValidationError);

    std::mt19937_64 rng(31);
    DigitWord w = random_word(rng, 60, 9);
    w[0] = 0;
    auto r = approximation_diagnostics(w, 50);
    CHECK(r.rows.size() == 50);
    CHECK(r.max_identity_residual < 1e-30);
    CHECK(r.all_half_checks);
    CHECK(r.all_hurwitz_checks);
}

TEST_CASE("Khintchine-Levy estimator") {
    CHECK_THROWS_AS(khintchine_levy_estimate(10, 9, 1), ValidationError);
    CHECK(khintchine_levy_estimate(1, 50, 42) == khintchine_levy_estimate(1, 50, 42));
    CHECK(khintchine_levy_estimate(200, 100, 7, 1) == khintchine_levy_estimate(200, 100, 7, 3));
    CHECK(khintchine_levy_constant() == doctest::Approx(3.2758229187218).epsilon(1e-12));
    DigitWord golden(1001, 1);
    // F_{n+1}^(1/n) -> golden ratio.
    CHECK(denominator_growth(golden, 1000) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-3));
}

TEST_CASE("decimal rendering truncates") {
    CHECK(AlgebraicValue(qs("sqrt(2)")).decimal(5) == "1.41421");
    CHECK(AlgebraicValue(qs("-sqrt(2)")).decimal(3) == "-1.414");
    CHECK(AlgebraicValue(QuadSurd(BigRational(1, 8))).decimal(3) == "0.125");
    CHECK(AlgebraicValue(QuadSurd(BigRational(1, 8))).decimal(2) == "0.12");
}
