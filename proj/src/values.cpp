#include "markov/values.hpp"

#include "markov/error.hpp"

#include <algorithm>

namespace markov {

AlgebraicValue f_value(const BiWord& w) {
    return AlgebraicValue(periodic_value(w.forward_expansion()), periodic_value(w.backward_expansion()));
}

std::vector<AlgebraicValue> periodic_orbit_values(const DigitWord& period) {
    std::vector<AlgebraicValue> out;
    BiWord base = BiWord::periodic(period);
    for (std::size_t r = 0; r < period.size(); ++r) out.push_back(f_value(base.shifted(static_cast<long long>(r))));
    return out;
}

BigRational continuity_modulus(unsigned k) {
    if (k < 2) throw ValidationError("continuity modulus needs k >= 2");
    return make_rational(2, fibonacci(k - 1) * fibonacci(k));
}

namespace {

const AlgebraicValue& max_of(const std::vector<AlgebraicValue>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (compare(values[i], values[best]) > 0) best = i;
    return values[best];
}

}  // namespace

AlgebraicValue lagrange_value(const BiWord& w) { return max_of(periodic_orbit_values(w.right_period())); }

AlgebraicValue markov_value(const BiWord& w, double tol) {
    if (!(tol > 0)) throw ValidationError("markov_value tolerance must be positive");
    const long long rc = static_cast<long long>(w.right_core().size());
    const long long lc = static_cast<long long>(w.left_core().size());
    const long long period = static_cast<long long>(std::max(w.left_period().size(), w.right_period().size()));

    std::vector<AlgebraicValue> tails = periodic_orbit_values(w.right_period());
    for (auto& v : periodic_orbit_values(w.left_period())) tails.push_back(std::move(v));

    // Shifts deep in a tail agree with a periodic shift on a window of radius G.
    // Tail phases strictly below the running maximum are covered by the
    // continuity modulus. Phases that attain it are covered because, within a
    // residue class mod 2p, deep shifts deviate from the periodic value with a
    // fixed sign and strictly decreasing size, so their supremum is dominated
    // by the evaluated member of the class (G >= 2p guarantees one exists).
    long long guard = 2 * period + 2;
    std::vector<AlgebraicValue> window;
    long long lo = 0, hi = -1;  // shifts evaluated so far: [lo, hi]
    for (;;) {
        const long long new_lo = -lc - guard, new_hi = rc + guard - 1;
        for (long long n = new_lo; n <= new_hi; ++n)
            if (n < lo || n > hi) window.push_back(f_value(w.shifted(n)));
        lo = new_lo;
        hi = new_hi;

        std::vector<AlgebraicValue> candidates = window;
        candidates.insert(candidates.end(), tails.begin(), tails.end());
        AlgebraicValue best = max_of(candidates);

        BigRational eps = continuity_modulus(static_cast<unsigned>(guard));
        bool certified = true;
        for (const auto& t : tails) {
            if (compare(t, best) == 0) continue;
            if (compare(t + eps, best) > 0) {
                certified = false;
                break;
            }
        }
        if (certified) return best;
        if (eps.get_d() < tol * 1e-3 || guard > 4096) {
            Interval e = best.enclosure(128);
            return AlgebraicValue::inexact(hull(e, e + Interval(eps, 128)));
        }
        guard *= 2;
    }
}

}  // namespace markov
