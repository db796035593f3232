#include "markov/sumset.hpp"

#include "markov/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <functional>

namespace markov {

bool SumCover::contains(const BigRational& x) const {
    auto it = std::upper_bound(intervals.begin(), intervals.end(), x,
                               [](const BigRational& v, const auto& iv) { return v < iv.first; });
    if (it == intervals.begin()) return false;
    --it;
    return x <= it->second;
}

SumCover minkowski_sum_cover(const IntervalCover& c1, const IntervalCover& c2, std::size_t budget) {
    if (c1.intervals.empty() || c2.intervals.empty()) throw ValidationError("empty cover");
    if (static_cast<double>(c1.intervals.size()) * static_cast<double>(c2.intervals.size()) > static_cast<double>(budget))
        throw ResourceError("pairwise sums exceed the interval budget");
    std::vector<std::pair<BigRational, BigRational>> sums;
    sums.reserve(c1.intervals.size() * c2.intervals.size());
    for (const auto& a : c1.intervals)
        for (const auto& b : c2.intervals) sums.emplace_back(a.lo + b.lo, a.hi + b.hi);
    std::sort(sums.begin(), sums.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SumCover out;
    out.depth1 = c1.depth;
    out.depth2 = c2.depth;
    for (auto& s : sums) {
        if (!out.intervals.empty() && s.first <= out.intervals.back().second) {
            if (out.intervals.back().second < s.second) out.intervals.back().second = s.second;
        } else {
            out.intervals.push_back(std::move(s));
        }
    }
    return out;
}

GapLemmaCertificate gap_lemma_certificate(const SubshiftSpec& spec1, const SubshiftSpec& spec2, int depth) {
    GapLemmaCertificate cert;
    cert.thickness1 = thickness_bound(spec1, depth);
    cert.thickness2 = thickness_bound(spec2, depth);
    cert.max_gap1 = max_gap_upper(spec1, depth);
    cert.max_gap2 = max_gap_upper(spec2, depth);
    NormalizedSpec n1 = validate(spec1), n2 = validate(spec2);
    auto h1 = state_hulls(n1)[static_cast<std::size_t>(n1.start())];
    auto h2 = state_hulls(n2)[static_cast<std::size_t>(n2.start())];
    cert.hull1_lo = h1.lo;
    cert.hull1_hi = h1.hi;
    cert.hull2_lo = h2.lo;
    cert.hull2_hi = h2.hi;
    // Hulls may live over different radicands; lengths are only compared in floating point
    // against gap upper bounds, so round them down.
    double len1 = (h1.hi.to_double() - h1.lo.to_double()) * (1 - 1e-12);
    double len2 = (h2.hi.to_double() - h2.lo.to_double()) * (1 - 1e-12);
    if (cert.thickness1 * cert.thickness2 * (1 - 1e-12) < 1) {
        cert.reason = "thickness product below 1";
    } else if (len1 < cert.max_gap2) {
        cert.reason = "first hull fits inside a gap of the second set";
    } else if (len2 < cert.max_gap1) {
        cert.reason = "second hull fits inside a gap of the first set";
    } else {
        cert.holds = true;
        cert.reason = "thickness product >= 1 and hulls longer than the other set's gaps";
    }
    if (h1.lo.d() == h2.lo.d() || h1.lo.is_rational() || h2.lo.is_rational()) cert.sum_lo = h1.lo + h2.lo;
    if (h1.hi.d() == h2.hi.d() || h1.hi.is_rational() || h2.hi.is_rational()) cert.sum_hi = h1.hi + h2.hi;
    return cert;
}

std::vector<double> cylinder_representatives(const SubshiftSpec& source, int depth, std::size_t budget) {
    if (depth < 1) throw ValidationError("depth must be >= 1");
    NormalizedSpec spec = validate(source);
    if (spec.count_words(depth) > static_cast<double>(budget))
        throw ResourceError("depth " + std::to_string(depth) + " exceeds the representative budget");
    std::vector<std::pair<double, double>> tails;
    for (const auto& h : state_hulls(spec)) tails.emplace_back(h.lo.to_double(), h.hi.to_double());
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(spec.count_words(depth)));
    // [0; w, y] = (p + p' y) / (q + q' y); the least point uses the tail extreme
    // matching the parity of the word length.
    std::function<void(int, int, double, double, double, double)> rec = [&](int state, int len, double p_prev,
                                                                             double q_prev, double p, double q) {
        if (len == depth) {
            const auto& t = tails[static_cast<std::size_t>(state)];
            double y = (len % 2 == 0) ? t.first : t.second;
            out.push_back((p + p_prev * y) / (q + q_prev * y));
            return;
        }
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            int s = spec.next(state, l);
            if (s == NormalizedSpec::kNone) continue;
            double a = static_cast<double>(spec.alphabet()[l]);
            rec(s, len + 1, p, q, a * p + p_prev, a * q + q_prev);
        }
    };
    rec(spec.start(), 0, 1, 0, 0, 1);
    return out;
}

DensityReport sum_density_check(const SubshiftSpec& source, int depth, double eps, double grid, std::size_t budget) {
    if (depth < 1) throw ValidationError("density depth must be >= 1");
    if (!(eps > 0) || !(grid > 0)) throw ValidationError("eps and grid must be positive");
    NormalizedSpec spec = validate(source);
    auto hull = state_hulls(spec)[static_cast<std::size_t>(spec.start())];
    DensityReport report;
    report.depth = depth;
    report.grid = grid;
    report.eps = eps;
    report.target_lo = hull.lo + hull.lo;
    report.target_hi = hull.hi + hull.hi;

    std::vector<double> reps = cylinder_representatives(source, depth, budget);
    report.interval_count = reps.size();
    const double base = std::floor(hull.lo.to_double() / grid) * grid;
    const double span = hull.hi.to_double() - base;
    if (span / grid > 1e8) throw ResourceError("density grid too fine");
    const std::size_t buckets = static_cast<std::size_t>(std::ceil(span / grid)) + 2;
    std::size_t n = 1;
    while (n < 2 * buckets) n <<= 1;

    double* signal = fftw_alloc_real(n);
    fftw_complex* spectrum = fftw_alloc_complex(n / 2 + 1);
    std::fill(signal, signal + n, 0.0);
    for (double x : reps) {
        auto i = static_cast<std::ptrdiff_t>(std::floor((x - base) / grid));
        signal[std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(buckets) - 1)] = 1.0;
    }
    fftw_plan forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), signal, spectrum, FFTW_ESTIMATE);
    fftw_plan backward = fftw_plan_dft_c2r_1d(static_cast<int>(n), spectrum, signal, FFTW_ESTIMATE);
    fftw_execute(forward);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        double re = spectrum[k][0], im = spectrum[k][1];
        spectrum[k][0] = re * re - im * im;
        spectrum[k][1] = 2 * re * im;
    }
    fftw_execute(backward);
    // signal[k] / n counts bucket pairs (i, j) with i + j = k: some witness sum lies in
    // [2 base + k grid, 2 base + (k + 2) grid), up to the rounding slack below.
    const double slack = 1e-12;
    const double lo = report.target_lo.to_double(), hi = report.target_hi.to_double();
    double worst = 0;
    std::ptrdiff_t last = -1;
    for (std::size_t k = 0; k < 2 * buckets; ++k) {
        if (signal[k] / static_cast<double>(n) < 0.5) continue;
        auto kk = static_cast<std::ptrdiff_t>(k);
        if (last < 0)
            worst = std::max(worst, 2 * base + static_cast<double>(kk + 2) * grid - lo);
        else
            worst = std::max(worst, static_cast<double>(kk - last + 2) * grid);
        last = kk;
    }
    if (last >= 0) worst = std::max(worst, hi - (2 * base + static_cast<double>(last) * grid));
    else worst = hi - lo;
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(signal);
    fftw_free(spectrum);

    report.max_gap = worst + slack;
    report.pass = report.max_gap <= eps;
    return report;
}

DensityReport hall_density_check(int depth, double eps, double grid) {
    return sum_density_check(full_shift(4), depth, eps, grid);
}

}  // namespace markov
