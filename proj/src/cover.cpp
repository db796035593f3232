#include "markov/cover.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace markov {

BigRational IntervalCover::total_length() const {
    BigRational total = 0;
    for (const auto& iv : intervals) total += iv.hi - iv.lo;
    return total;
}

std::pair<BigRational, BigRational> cylinder(std::span<const Digit> word) {
    BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // (p_{n-1}, q_{n-1}), (p_n, q_n) for [0; ...]
    for (Digit a : word) {
        if (a < 1) throw ValidationError("cylinder digits must be >= 1");
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    BigRational x = make_rational(p1, q1);
    BigRational y = make_rational(p1 + p0, q1 + q0);
    if (y < x) std::swap(x, y);
    return {x, y};
}

namespace {

void check_budget(const NormalizedSpec& spec, int length, std::size_t budget) {
    if (spec.count_words(length) > static_cast<double>(budget))
        throw ResourceError("depth " + std::to_string(length) + " exceeds the interval budget of " + std::to_string(budget));
}

// Depth-first walk over admissible words of length <= max_len; the visitor
// sees each word with its end state and returns false to prune.
void walk(const NormalizedSpec& spec, int max_len,
          const std::function<bool(const DigitWord&, int)>& visit) {
    DigitWord word;
    std::function<void(int)> rec = [&](int state) {
        if (!visit(word, state) || static_cast<int>(word.size()) == max_len) return;
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            int t = spec.next(state, l);
            if (t == NormalizedSpec::kNone) continue;
            word.push_back(spec.alphabet()[l]);
            rec(t);
            word.pop_back();
        }
    };
    rec(spec.start());
}

}  // namespace

std::vector<DigitWord> admissible_words(const NormalizedSpec& spec, int length, std::size_t budget) {
    if (length < 0) throw ValidationError("word length must be >= 0");
    check_budget(spec, length, budget);
    std::vector<DigitWord> out;
    walk(spec, length, [&](const DigitWord& w, int) {
        if (static_cast<int>(w.size()) == length) out.push_back(w);
        return true;
    });
    return out;
}

IntervalCover cylinder_cover(const SubshiftSpec& spec, int depth, std::size_t budget) {
    if (depth < 1) throw ValidationError("cover depth must be >= 1");
    NormalizedSpec n = validate(spec);
    IntervalCover cover;
    cover.depth = depth;
    for (auto& w : admissible_words(n, depth, budget)) {
        auto [lo, hi] = cylinder(w);
        cover.intervals.push_back({std::move(lo), std::move(hi), std::move(w)});
    }
    std::sort(cover.intervals.begin(), cover.intervals.end(),
              [](const CoverInterval& a, const CoverInterval& b) { return a.lo < b.lo; });
    return cover;
}

std::string cover_to_csv(const IntervalCover& cover) {
    std::ostringstream out;
    out << "depth,index,word,lo,hi\n";
    for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
        const auto& iv = cover.intervals[i];
        std::string w;
        for (std::size_t j = 0; j < iv.word.size(); ++j) w += (j ? " " : "") + std::to_string(iv.word[j]);
        out << cover.depth << ',' << i << ',' << w << ',' << to_string(iv.lo) << ',' << to_string(iv.hi) << '\n';
    }
    return out.str();
}

namespace {

// Greedy extreme sequence: [0; a1, a2, ...] decreases in a1, increases in a2, ...
// `minimize` picks the largest letter at odd positions and the smallest at even.
PeriodicCF extreme_tail(const NormalizedSpec& spec, int state, bool minimize) {
    std::map<std::pair<int, int>, std::size_t> seen;
    DigitWord digits;
    for (int parity = 0;; parity ^= 1) {
        auto [it, fresh] = seen.emplace(std::make_pair(state, parity), digits.size());
        if (!fresh) {
            DigitWord pre{0};
            pre.insert(pre.end(), digits.begin(), digits.begin() + static_cast<long>(it->second));
            return PeriodicCF(pre, DigitWord(digits.begin() + static_cast<long>(it->second), digits.end()));
        }
        bool take_max = (parity == 0) == minimize;
        int best = NormalizedSpec::kNone;
        std::size_t best_letter = 0;
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            if (spec.next(state, l) == NormalizedSpec::kNone) continue;
            if (best == NormalizedSpec::kNone || take_max) {
                best = spec.next(state, l);
                best_letter = l;
            }
        }
        digits.push_back(spec.alphabet()[best_letter]);
        state = best;
    }
}

}  // namespace

std::vector<StateHull> state_hulls(const NormalizedSpec& spec) {
    std::vector<StateHull> out;
    out.reserve(spec.state_count());
    for (int s = 0; s < static_cast<int>(spec.state_count()); ++s) {
        PeriodicCF lo = extreme_tail(spec, s, true), hi = extreme_tail(spec, s, false);
        out.push_back({lo, hi, periodic_value(lo), periodic_value(hi)});
    }
    return out;
}

std::pair<double, double> word_hull(std::span<const Digit> word, double tail_lo, double tail_hi) {
    double p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    for (Digit a : word) {
        double p2 = static_cast<double>(a) * p1 + p0, q2 = static_cast<double>(a) * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    // [0; word + y] = (p_n + p_{n-1} y) / (q_n + q_{n-1} y), y the tail value.
    double x = (p1 + p0 * tail_lo) / (q1 + q0 * tail_lo);
    double y = (p1 + p0 * tail_hi) / (q1 + q0 * tail_hi);
    return {std::min(x, y), std::max(x, y)};
}

namespace {

constexpr mpfr_prec_t kThicknessPrecision = 128;

struct ChildHull {
    Interval lo, hi;
};

// Children of each state in increasing y order, with their restricted hulls.
std::vector<std::vector<ChildHull>> child_hulls(const NormalizedSpec& spec, const std::vector<StateHull>& hulls) {
    std::vector<std::vector<ChildHull>> out(spec.state_count());
    Interval one(BigInt(1), kThicknessPrecision);
    for (std::size_t s = 0; s < spec.state_count(); ++s) {
        for (std::size_t l = spec.alphabet().size(); l-- > 0;) {
            int t = spec.next(static_cast<int>(s), l);
            if (t == NormalizedSpec::kNone) continue;
            Interval a(BigInt(spec.alphabet()[l]), kThicknessPrecision);
            const auto& h = hulls[static_cast<std::size_t>(t)];
            out[s].push_back({one / (a + h.hi.enclosure(kThicknessPrecision)), one / (a + h.lo.enclosure(kThicknessPrecision))});
        }
    }
    return out;
}

// (y2 - y1) / ((1 + r y1)(1 + r y2)): length of the image of [y1, y2] under the
// inverse branch of a parent with q_{k-1}/q_k = r, up to the factor 1/q_k^2.
Interval weighted_length(const Interval& y1, const Interval& y2, const Interval& r) {
    Interval one(BigInt(1), kThicknessPrecision);
    return (y2 - y1) / ((one + r * y1) * (one + r * y2));
}

// Lower bound of min over gaps of min(bridge)/gap for parents with r in [r_lo, r_hi].
// A bridge left of its gap has ratio increasing in r, one on the right decreasing.
double state_ratio(const std::vector<ChildHull>& children, const Interval& r_lo, const Interval& r_hi) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < children.size(); ++i) {
        const auto& left = children[i];
        const auto& right = children[i + 1];
        Interval left_ratio = weighted_length(left.lo, left.hi, r_lo) / weighted_length(left.hi, right.lo, r_lo);
        Interval right_ratio = weighted_length(right.lo, right.hi, r_hi) / weighted_length(left.hi, right.lo, r_hi);
        best = std::min({best, left_ratio.lower_double(), right_ratio.lower_double()});
    }
    return best;
}

struct Presentation {
    NormalizedSpec spec;
    std::vector<StateHull> hulls;
    std::vector<std::vector<ChildHull>> children;
};

Presentation presentation(const SubshiftSpec& source, int depth) {
    if (depth < 1) throw ValidationError("thickness depth must be >= 1");
    Presentation p{validate(source), {}, {}};
    p.hulls = state_hulls(p.spec);
    p.children = child_hulls(p.spec, p.hulls);
    bool branches = false;
    for (const auto& c : p.children) branches = branches || c.size() > 1;
    if (!branches) throw ValidationError("thickness undefined: the set has no gaps (finite or single point)");
    return p;
}

struct Convergents {
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
};

// Visits every admissible word of length < depth with its convergent data.
void walk_parents(const NormalizedSpec& spec, int depth,
                  const std::function<void(const DigitWord&, int, const Convergents&)>& visit) {
    DigitWord word;
    std::function<void(int, const Convergents&)> rec = [&](int state, const Convergents& c) {
        visit(word, state, c);
        if (static_cast<int>(word.size()) + 1 >= depth) return;
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            int t = spec.next(state, l);
            if (t == NormalizedSpec::kNone) continue;
            Digit a = spec.alphabet()[l];
            Convergents n{c.p, c.q, a * c.p + c.p_prev, a * c.q + c.q_prev};
            word.push_back(a);
            rec(t, n);
            word.pop_back();
        }
    };
    rec(spec.start(), Convergents{});
}

// Configurations (state, last `depth` digits) occurring at every length >= depth.
std::set<std::pair<int, DigitWord>> tail_configurations(const NormalizedSpec& spec, int depth) {
    std::set<std::pair<int, DigitWord>> seen;
    std::vector<std::pair<int, DigitWord>> queue;
    walk(spec, depth, [&](const DigitWord& w, int s) {
        if (static_cast<int>(w.size()) == depth && seen.emplace(s, w).second) queue.emplace_back(s, w);
        return true;
    });
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [s, w] = queue[i];
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            int t = spec.next(s, l);
            if (t == NormalizedSpec::kNone) continue;
            DigitWord u(w.begin() + 1, w.end());
            u.push_back(spec.alphabet()[l]);
            if (seen.emplace(t, u).second) queue.emplace_back(t, u);
        }
    }
    return seen;
}

}  // namespace

double thickness_bound(const SubshiftSpec& source, int depth) {
    Presentation pres = presentation(source, depth);
    double best = std::numeric_limits<double>::infinity();
    walk_parents(pres.spec, depth, [&](const DigitWord&, int state, const Convergents& c) {
        const auto& ch = pres.children[static_cast<std::size_t>(state)];
        if (ch.size() < 2) return;
        Interval r(make_rational(c.q_prev, c.q), kThicknessPrecision);
        best = std::min(best, state_ratio(ch, r, r));
    });
    for (const auto& [state, suffix] : tail_configurations(pres.spec, depth)) {
        const auto& ch = pres.children[static_cast<std::size_t>(state)];
        if (ch.size() < 2) continue;
        // q_{k-1}/q_k = [0; a_k, ..., a_1] lies in the full cylinder of the reversed suffix.
        DigitWord reversed(suffix.rbegin(), suffix.rend());
        auto [lo, hi] = cylinder(reversed);
        best = std::min(best, state_ratio(ch, Interval(lo, kThicknessPrecision), Interval(hi, kThicknessPrecision)));
    }
    return best;
}

double max_gap_upper(const SubshiftSpec& source, int depth) {
    Presentation pres = presentation(source, depth);
    double best = 0;
    walk_parents(pres.spec, depth, [&](const DigitWord&, int state, const Convergents& c) {
        const auto& ch = pres.children[static_cast<std::size_t>(state)];
        Interval r(make_rational(c.q_prev, c.q), kThicknessPrecision);
        Interval scale(make_rational(BigInt(1), c.q * c.q), kThicknessPrecision);
        for (std::size_t i = 0; i + 1 < ch.size(); ++i)
            best = std::max(best, (scale * weighted_length(ch[i].hi, ch[i + 1].lo, r)).upper_double());
    });
    NormalizedSpec& spec = pres.spec;
    walk(spec, depth, [&](const DigitWord& w, int) {
        if (static_cast<int>(w.size()) == depth) {
            auto [lo, hi] = cylinder(w);
            best = std::max(best, Interval(BigRational(hi - lo), kThicknessPrecision).upper_double());
        }
        return true;
    });
    return best;
}

}  // namespace markov
