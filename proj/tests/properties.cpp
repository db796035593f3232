#include "properties.hpp"

#include "markov/algebraic.hpp"
#include "markov/biword.hpp"
#include "markov/continued_fraction.hpp"
#include "markov/cover.hpp"
#include "markov/dimension.hpp"
#include "markov/error.hpp"
#include "markov/spectra.hpp"
#include "markov/values.hpp"

#include <random>

namespace markov::props {

namespace {

DigitWord random_word(std::mt19937_64& rng, std::size_t n, Digit max_digit) {
    std::uniform_int_distribution<Digit> d(1, max_digit);
    DigitWord w(n);
    for (auto& x : w) x = d(rng);
    return w;
}

void fail(Outcome& o, const std::string& what) {
    if (o.ok) o.detail = what;
    o.ok = false;
}

}  // namespace

std::vector<SubshiftSpec> sample_specs() {
    return {full_shift(2),
            full_shift(3),
            full_shift(4),
            cantor_set_x(),
            block_set_k1_22(),
            parse_subshift("alphabet=1,2; forbidden=22"),
            parse_subshift("alphabet=1,2,3; forbidden=13,31"),
            parse_subshift("blocks=12|21_2"),
            parse_subshift("alphabet=2,3; forbidden=333"),
            parse_subshift("alphabet=1,2,3,4,5; forbidden=11,55")};
}

Outcome determinant_identity(int words, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(2, 60);
    std::uniform_int_distribution<Digit> top(1, 50), lead(0, 5);
    for (int i = 0; i < words; ++i) {
        DigitWord w = random_word(rng, len(rng), top(rng));
        w[0] = lead(rng);
        auto c = convergents(FiniteCF{w});
        for (std::size_t n = 1; n < c.size(); ++n) {
            ++o.cases;
            BigInt det = c[n].p * c[n - 1].q - c[n - 1].p * c[n].q;
            if (det != ((n - 1) % 2 == 0 ? 1 : -1)) fail(o, "word " + std::to_string(i) + " index " + std::to_string(n));
        }
    }
    return o;
}

Outcome enclosure_soundness(int values, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, 4);
    for (int i = 0; i < values; ++i) {
        BiWord w(random_word(rng, len(rng), 5), random_word(rng, len(rng) - 1, 5), random_word(rng, len(rng), 5),
                 random_word(rng, len(rng), 5));
        AlgebraicValue v = i % 2 ? f_value(w) : markov_value(w);
        std::optional<Interval> previous;
        for (mpfr_prec_t bits : {64, 256, 1024}) {
            ++o.cases;
            Interval e = v.enclosure(bits);
            BigRational lo, hi;
            mpfr_get_q(lo.get_mpq_t(), e.lower());
            mpfr_get_q(hi.get_mpq_t(), e.upper());
            if (v.is_exact() && (compare(v, lo) < 0 || compare(v, hi) > 0))
                fail(o, "exact value outside its enclosure for " + w.to_string());
            if (previous && (previous->disjoint(e) || e.width_double() > previous->width_double()))
                fail(o, "refinement disagrees with the coarser enclosure for " + w.to_string());
            previous = e;
        }
    }
    return o;
}

Outcome lagrange_inside_markov(int instances, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(0, 40);
    int done = 0;
    while (done < instances) {
        std::vector<Digit> alphabet = done % 2 ? std::vector<Digit>{1, 2} : std::vector<Digit>{1, 2, 3};
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        SubshiftSpec spec{alphabet, {}, {}};
        for (int k = 0; k < 2; ++k) {
            DigitWord w(3);
            for (auto& d : w) d = alphabet[pick(rng)];
            spec.forbidden.push_back(w);
        }
        try {
            validate(spec);
        } catch (const ValidationError&) {
            continue;  // empty language, draw again
        }
        // Random table on windows of length 3 centred at the origin.
        CylinderTable f;
        f.origin = 1;
        f.length = 3;
        for (Digit a : alphabet)
            for (Digit b : alphabet)
                for (Digit c : alphabet) f.values[DigitWord{a, b, c}] = BigRational(num(rng), 8);
        auto s = dynamical_spectra(spec, f, 4);
        if (s.lagrange.entries.empty()) fail(o, "empty Lagrange approximation for " + to_string(spec));
        for (const auto& e : s.lagrange.entries) {
            ++o.cases;
            bool found = false;
            for (const auto& m : s.markov.entries)
                if (compare(m.value, e.value) == 0) found = true;
            if (!found) fail(o, "Lagrange value " + e.value.to_string() + " missing from M for " + to_string(spec));
        }
        ++done;
    }
    return o;
}

Outcome cover_nesting(int max_depth) {
    Outcome o;
    for (const auto& spec : sample_specs()) {
        IntervalCover prev = cylinder_cover(spec, 1);
        for (int n = 2; n <= max_depth; ++n) {
            IntervalCover c = cylinder_cover(spec, n);
            ++o.cases;
            if (c.total_length() > prev.total_length()) fail(o, "total length grew at depth " + std::to_string(n) + " for " + to_string(spec));
            // Both covers are sorted with disjoint interiors: sweep once.
            std::size_t j = 0;
            for (const auto& iv : c.intervals) {
                while (j < prev.intervals.size() && prev.intervals[j].hi < iv.hi) ++j;
                bool inside = j < prev.intervals.size() && prev.intervals[j].lo <= iv.lo;
                bool unique = inside && !(j + 1 < prev.intervals.size() && prev.intervals[j + 1].lo <= iv.lo &&
                                          iv.hi <= prev.intervals[j + 1].hi);
                if (!unique) fail(o, "interval not nested at depth " + std::to_string(n) + " for " + to_string(spec));
            }
            prev = std::move(c);
        }
    }
    return o;
}

Outcome monotone_dimension_bounds(int max_depth) {
    Outcome o;
    for (const auto& spec : sample_specs()) {
        double prev_lo = 0, prev_hi = 1;
        for (int depth = 2; depth <= max_depth; ++depth) {
            ++o.cases;
            double lo = cover_dim_lower(spec, depth), hi = cover_dim_upper(spec, depth);
            std::string where = " at depth " + std::to_string(depth) + " for " + to_string(spec);
            if (lo > hi) fail(o, "lower > upper" + where);
            if (lo < prev_lo - 1e-9) fail(o, "lower bound decreased" + where);
            if (hi > prev_hi + 1e-9) fail(o, "upper bound increased" + where);
            prev_lo = lo;
            prev_hi = hi;
        }
    }
    return o;
}

}  // namespace markov::props
