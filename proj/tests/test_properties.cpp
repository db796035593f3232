#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

using namespace markov::props;

namespace {

void expect(const Outcome& o) {
    INFO(o.detail);
    CHECK(o.ok);
    CHECK(o.cases > 0);
}

}  // namespace

TEST_CASE("convergent determinant identity on 1000 random words") { expect(determinant_identity(1000, 5)); }
TEST_CASE("enclosures are sound across three refinement levels") { expect(enclosure_soundness(60, 29)); }
TEST_CASE("L approximations lie inside M approximations") { expect(lagrange_inside_markov(20, 99)); }
TEST_CASE("covers nest for ten specs") { expect(cover_nesting(7)); }
TEST_CASE("dimension bounds are monotone for ten specs") { expect(monotone_dimension_bounds(6)); }
