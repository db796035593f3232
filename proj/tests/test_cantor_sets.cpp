#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "markov/continued_fraction.hpp"
#include "markov/cover.hpp"
#include "markov/error.hpp"
#include "markov/subshift.hpp"

#include <cmath>
#include <functional>

using namespace markov;

namespace {

bool has_forbidden_suffix(const DigitWord& w, const std::vector<DigitWord>& forbidden) {
    for (const auto& f : forbidden)
        if (f.size() <= w.size() && std::equal(f.rbegin(), f.rend(), w.rbegin())) return true;
    return false;
}

// A word is admissible when some long extension avoids every forbidden factor.
bool extends(DigitWord& w, std::size_t target, const SubshiftSpec& spec) {
    if (w.size() >= target) return true;
    for (Digit d : spec.alphabet) {
        w.push_back(d);
        bool ok = !has_forbidden_suffix(w, spec.forbidden) && extends(w, target, spec);
        w.pop_back();
        if (ok) return true;
    }
    return false;
}

std::size_t brute_count(const SubshiftSpec& spec, std::size_t length, std::size_t lookahead) {
    std::size_t count = 0;
    std::function<void(DigitWord&)> rec = [&](DigitWord& w) {
        if (w.size() == length) {
            DigitWord copy = w;
            if (extends(copy, length + lookahead, spec)) ++count;
            return;
        }
        for (Digit d : spec.alphabet) {
            w.push_back(d);
            if (!has_forbidden_suffix(w, spec.forbidden)) rec(w);
            w.pop_back();
        }
    };
    DigitWord w;
    rec(w);
    return count;
}

SubshiftSpec spec_from(const char* text) { return parse_subshift(text); }

std::vector<SubshiftSpec> sample_specs() {
    return {full_shift(2),
            full_shift(3),
            full_shift(4),
            cantor_set_x(),
            block_set_k1_22(),
            spec_from("alphabet=1,2; forbidden=22"),
            spec_from("alphabet=1,2,3; forbidden=13,31"),
            spec_from("blocks=12|21_2"),
            spec_from("alphabet=2,3; forbidden=333"),
            spec_from("alphabet=1,2,3,4,5; forbidden=11,55")};
}

}  // namespace

TEST_CASE("subscript expansion") {
    CHECK(expand_subscript_word("2121_3") == DigitWord{2, 1, 2, 1, 1, 1});
    CHECK(expand_subscript_word("2_3121_22_21") == DigitWord{2, 2, 2, 1, 2, 1, 1, 2, 2, 1});
    CHECK(expand_subscript_word("1_{12}").size() == 12);
    CHECK_THROWS_AS(expand_subscript_word("_2"), ValidationError);
    CHECK_THROWS_AS(expand_subscript_word("1_"), ValidationError);
    CHECK_THROWS_AS(expand_subscript_word("1_{3"), ValidationError);
}

TEST_CASE("spec parsing and validation") {
    SubshiftSpec x = cantor_set_x();
    CHECK(x.alphabet == std::vector<Digit>{1, 2});
    CHECK(x.forbidden.size() == 9);
    CHECK(parse_subshift(to_string(x)) == x);
    CHECK(parse_subshift("alphabet=1,2,3,4  # comment\n") == full_shift(4));
    CHECK(block_set_k1_22().block_mode());
    CHECK_NOTHROW(validate(full_shift(4)));
    CHECK_NOTHROW(validate(x));
    CHECK_THROWS_AS(validate(spec_from("alphabet=1; forbidden=1")), ValidationError);
    CHECK_THROWS_AS(validate(spec_from("alphabet=1,2; forbidden=1,2")), ValidationError);
    CHECK_THROWS_AS(parse_subshift("alphabet=1,x"), ValidationError);
    CHECK_THROWS_AS(parse_subshift("colour=blue"), ValidationError);
    CHECK_THROWS_AS(validate(SubshiftSpec{}), ValidationError);
    // Words that can only lead into a dead end are trimmed.
    NormalizedSpec trap = validate(spec_from("alphabet=1,2; forbidden=21,22"));
    CHECK(trap.admissible(DigitWord{1, 1, 1}));
    CHECK_FALSE(trap.admissible(DigitWord{1, 2}));
}

TEST_CASE("block mode matches letter-level description") {
    NormalizedSpec k = validate(block_set_k1_22());
    CHECK(k.admissible(DigitWord{1, 2, 2, 1}));
    CHECK(k.admissible(DigitWord{2, 2, 2, 2}));
    CHECK(k.admissible(DigitWord{2}));
    CHECK_FALSE(k.admissible(DigitWord{1, 2, 1}));
    CHECK_FALSE(k.admissible(DigitWord{2, 2, 2, 1}));
    CHECK(k.periodic_admissible(DigitWord{1, 2, 2}));
    CHECK_FALSE(k.periodic_admissible(DigitWord{1, 2}));
    // Words of length n: F_{n+1}-like recursion a_n = a_{n-1} + a_{n-2} over starts.
    CHECK(k.count_words(1) == 2);
    CHECK(k.count_words(2) == 3);
    CHECK(k.count_words(3) == 5);
    // Every K word avoids the X forbidden list.
    NormalizedSpec x = validate(cantor_set_x());
    for (const auto& w : admissible_words(k, 12)) CHECK(x.admissible(w));
}

TEST_CASE("X word counts agree with brute force") {
    SubshiftSpec x = cantor_set_x();
    NormalizedSpec nx = validate(x);
    for (int n = 1; n <= 8; ++n) {
        std::size_t oracle = brute_count(x, static_cast<std::size_t>(n), 40);
        CHECK(cylinder_cover(x, n).intervals.size() == oracle);
        CHECK(nx.count_words(n) == static_cast<double>(oracle));
    }
    CHECK(cylinder_cover(x, 5).intervals.size() == brute_count(x, 5, 40));
}

TEST_CASE("cylinder endpoints") {
    auto c1 = cylinder(DigitWord{1});
    CHECK(c1.first == BigRational(1, 2));
    CHECK(c1.second == BigRational(1));
    auto c2 = cylinder(DigitWord{2});
    CHECK(c2.first == BigRational(1, 3));
    CHECK(c2.second == BigRational(1, 2));
    auto cover = cylinder_cover(full_shift(2), 1);
    REQUIRE(cover.intervals.size() == 2);
    CHECK(cover.intervals[0].word == DigitWord{2});
    CHECK(cover.intervals[1].word == DigitWord{1});
    CHECK_THROWS_AS(cylinder_cover(full_shift(2), 0), ValidationError);
    CHECK_THROWS_AS(cylinder_cover(full_shift(4), 12, 1000), ResourceError);
}

TEST_CASE("golden cylinders shrink onto (sqrt5-1)/2") {
    SubshiftSpec ones = spec_from("alphabet=1");
    double g = (std::sqrt(5.0) - 1) / 2, prev = 1;
    for (int n = 1; n <= 30; ++n) {
        auto c = cylinder_cover(ones, n);
        REQUIRE(c.intervals.size() == 1);
        double lo = c.intervals[0].lo.get_d(), hi = c.intervals[0].hi.get_d();
        CHECK(lo <= g);
        CHECK(g <= hi);
        CHECK(hi - lo < prev);
        prev = hi - lo;
    }
    CHECK(prev < 1e-12);
}

TEST_CASE("periodic points lie in their cylinders") {
    for (const auto& spec : sample_specs()) {
        NormalizedSpec ns = validate(spec);
        for (int len = 1; len <= 4; ++len) {
            for (const auto& period : admissible_words(ns, len)) {
                if (!ns.periodic_admissible(period)) continue;
                DigitWord pre{0};
                QuadSurd v = periodic_value(PeriodicCF(pre, period));
                for (int n = 1; n <= 6; ++n) {
                    DigitWord prefix = PeriodicCF(pre, period).prefix(static_cast<std::size_t>(n) + 1);
                    prefix.erase(prefix.begin());
                    auto [lo, hi] = cylinder(prefix);
                    CHECK(QuadSurd(lo) <= v);
                    CHECK(v <= QuadSurd(hi));
                }
            }
        }
    }
}

TEST_CASE("state hulls are exact extremes") {
    auto hulls = state_hulls(validate(full_shift(2)));
    REQUIRE(hulls.size() == 1);
    CHECK(hulls[0].lo == parse_quad_surd("(-1+sqrt(3))/2"));  // [0; 2,1,2,1,...]
    CHECK(hulls[0].hi == parse_quad_surd("-1+sqrt(3)"));      // [0; 1,2,1,2,...]
    auto h4 = state_hulls(validate(full_shift(4)));
    CHECK(h4[0].lo == QuadSurd(BigInt(-1), BigInt(1), BigInt(2), BigInt(2)));  // [0; 4,1,4,1,...]
    CHECK(h4[0].hi == QuadSurd(BigInt(-2), BigInt(2), BigInt(2), BigInt(1)));  // [0; 1,4,1,4,...]
}

TEST_CASE("thickness bounds") {
    // C(2): bridges and gaps of the first level are all similar; (sqrt3-1)/2.
    double c2 = (std::sqrt(3.0) - 1) / 2;
    double c4 = 3 * std::sqrt(2.0) / 4;
    double prev = 0;
    for (int depth = 1; depth <= 6; ++depth) {
        double t = thickness_bound(full_shift(2), depth);
        CHECK(t == doctest::Approx(c2).epsilon(1e-9));
        CHECK(t >= prev - 1e-12);
        prev = t;
        CHECK(thickness_bound(full_shift(4), depth) == doctest::Approx(c4).epsilon(1e-9));
    }
    CHECK(thickness_bound(full_shift(4), 8) >= 1.0);
    CHECK(thickness_bound(full_shift(2), 8) > 0.0);
    double tk = thickness_bound(block_set_k1_22(), 6);
    CHECK(tk > 0.0);
    CHECK(tk < 1.0);
    CHECK_THROWS_AS(thickness_bound(spec_from("alphabet=1"), 3), ValidationError);
    CHECK_THROWS_AS(thickness_bound(full_shift(2), 0), ValidationError);
}

TEST_CASE("max gap upper bound") {
    // Largest gap of C(2) separates the first-level branches 1/(2+u) and 1/(1+u),
    // u in [(sqrt3-1)/2, sqrt3-1]; deeper gaps are shorter than a depth-6 cylinder.
    double x = (std::sqrt(3.0) - 1) / 2, y = std::sqrt(3.0) - 1;
    double gap = 1 / (1 + y) - 1 / (2 + x);
    CHECK(max_gap_upper(full_shift(2), 6) == doctest::Approx(gap).epsilon(1e-9));
    CHECK(max_gap_upper(full_shift(2), 3) >= max_gap_upper(full_shift(2), 6) - 1e-15);
}
