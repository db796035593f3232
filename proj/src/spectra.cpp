#include "markov/spectra.hpp"

#include "markov/error.hpp"
#include "markov/markov_tree.hpp"
#include "markov/values.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <functional>
#include <set>

namespace markov {

std::string to_string(SpectrumApprox::Kind kind) { return kind == SpectrumApprox::Kind::markov ? "markov" : "lagrange"; }

std::map<BigInt, DigitWord> markov_periods(const BigInt& z_max) {
    const DigitWord a{1, 1}, b{2, 2};
    std::map<BigInt, DigitWord> out;
    if (z_max >= 1) out[1] = a;
    if (z_max >= 2) out[2] = b;
    if (z_max < 5) return out;
    auto cat = [](const DigitWord& x, const DigitWord& y) {
        DigitWord r = x;
        r.insert(r.end(), y.begin(), y.end());
        return r;
    };
    // (u, uv, v) with Markov numbers (m_u, m_uv, m_v); the middle word is the largest.
    struct Node {
        BigInt mu, muv, mv;
        DigitWord u, uv, v;
    };
    std::deque<Node> queue{{1, 5, 2, a, cat(a, b), b}};
    out[5] = cat(a, b);
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        Node left{n.mu, 3 * n.mu * n.muv - n.mv, n.muv, n.u, cat(n.u, n.uv), n.uv};
        Node right{n.muv, 3 * n.muv * n.mv - n.mu, n.mv, n.uv, cat(n.uv, n.v), n.v};
        for (Node* c : {&left, &right}) {
            if (c->muv > z_max) continue;
            out.emplace(c->muv, c->uv);
            queue.push_back(std::move(*c));
        }
    }
    return out;
}

namespace {

DigitWord primitive_root(const DigitWord& w) {
    for (std::size_t p = 1; p < w.size(); ++p)
        if (w.size() % p == 0 && std::equal(w.begin() + static_cast<long>(p), w.end(), w.begin())) return DigitWord(w.begin(), w.begin() + static_cast<long>(p));
    return w;
}

}  // namespace

SpectrumApprox spectrum_below_3(std::size_t count) {
    if (count < 1) throw ValidationError("count must be >= 1");
    auto zs = smallest_markov_numbers(count);
    auto periods = markov_periods(zs.back());
    SpectrumApprox out;
    out.kind = SpectrumApprox::Kind::lagrange;
    for (const auto& z : zs)
        out.entries.push_back({AlgebraicValue(lagrange_number(z)), BiWord::periodic(primitive_root(periods.at(z))).to_string()});
    return out;
}

namespace {

void require_prefix(const std::string& name, const std::string& decimal, const std::string& printed) {
    if (decimal.compare(0, printed.size(), printed) != 0)
        throw NumericError(name + ": computed " + decimal + " disagrees with printed " + printed);
}

}  // namespace

std::vector<NamedConstant> named_constants(int digits) {
    if (digits < 10) throw ValidationError("precision must be at least 10 digits");
    std::vector<NamedConstant> table;

    NamedConstant sigma;
    sigma.name = "sigma";
    sigma.printed = "3.1181";
    sigma.decimal = "3.1181";
    sigma.check = "decimal only, no defining word or closed form available";
    table.push_back(sigma);

    auto from_word = [&](const std::string& name, const std::string& word_text) {
        NamedConstant c;
        c.name = name;
        BiWord w = parse_biword(word_text);
        c.word = w.to_string();
        c.value = f_value(w);
        c.closed_form = c.value->to_string();
        c.decimal = c.value->decimal(digits);
        return c;
    };

    NamedConstant alpha = from_word("alpha_inf", "(2)* 1,2,1,1,2,2,2,1 | 2 (1,1,2,2,2,1,2)*");
    AlgebraicValue alpha_closed(parse_quad_surd("(77+sqrt(18229))/82"), parse_quad_surd("(14711-sqrt(2))/20791"));
    if (compare(*alpha.value, alpha_closed) != 0) throw NumericError("alpha_inf: word and closed form disagree");
    if (compare(markov_value(parse_biword(*alpha.word)), *alpha.value) != 0)
        throw NumericError("alpha_inf: f at the origin is not the Markov value of its word");
    alpha.cross_checked = true;
    alpha.check = "f(word) equals the closed form and the word's Markov value exactly";
    table.push_back(alpha);

    NamedConstant b = from_word("b_inf", "(2,1,1,2,2,2,1)* | 2 (1,1,2,2,2,1,2)*");
    AlgebraicValue b_closed(parse_quad_surd("sqrt(18229)/41"));
    b.printed = "3.2930442439";
    if (compare(*b.value, b_closed) != 0) throw NumericError("b_inf: word and closed form disagree");
    require_prefix(b.name, b.decimal, b.printed);
    b.closed_form = b_closed.to_string();
    b.cross_checked = true;
    b.check = "f(word) equals sqrt(18229)/41 exactly";
    table.push_back(b);

    NamedConstant big = from_word("B_inf",
                                  "(2,1,1,2,1,1,2,1,2,2,2,1)* 2,2,1,2,1,1,2,2,2,1,2,1,1,2,2,2,1 | "
                                  "2,1 (1,2,2,2,1,2,1,1,2,1,1,2)*");
    big.printed = "3.2930444814";
    Interval diff = big.value->enclosure(128) - Interval(parse_rational(big.printed), 128);
    if (!(std::max(std::abs(diff.lower_double()), std::abs(diff.upper_double())) < 1e-9))
        throw NumericError("B_inf: f(word) is not within 1e-9 of the printed value");
    require_prefix(big.name, big.decimal, big.printed);
    big.cross_checked = true;
    big.check = "f(word) within 1e-9 of the printed decimal";
    table.push_back(big);

    NamedConstant c;
    c.name = "c";
    c.value = AlgebraicValue(parse_quad_surd("(77+sqrt(18229))/82"), parse_quad_surd("(17633692-sqrt(151905))/24923467"));
    c.closed_form = c.value->to_string();
    c.decimal = c.value->decimal(digits);
    c.printed = "3.29304447990138";
    require_prefix(c.name, c.decimal, c.printed);
    c.check = "closed form only";
    table.push_back(c);

    NamedConstant cf;
    cf.name = "c_F";
    cf.value = AlgebraicValue(parse_quad_surd("(2221564096+283748*sqrt(462))/491993569"));
    cf.closed_form = cf.value->to_string();
    cf.decimal = cf.value->decimal(digits);
    cf.printed = "4.52782956616";
    require_prefix(cf.name, cf.decimal, cf.printed);
    cf.check = "closed form only";
    table.push_back(cf);
    return table;
}

QuadSurd QuadraticForm::discriminant() const { return b * b - QuadSurd(4) * a * c; }

FormMinimum form_minimum(const QuadraticForm& q, int box) {
    if (box < 1) throw ValidationError("box must be >= 1");
    if (q.discriminant() != QuadSurd(1))
        throw ValidationError("form discriminant is " + q.discriminant().to_string() + ", expected 1");
    const double a = q.a.to_double(), b = q.b.to_double(), c = q.c.to_double();
    auto value = [&](long x, long y) {
        QuadSurd X(x), Y(y);
        QuadSurd v = q.a * X * X + q.b * X * Y + q.c * Y * Y;
        return v.sign() < 0 ? -v : v;
    };
    // Double-precision screen, exact comparison among near-minimal candidates.
    double best = INFINITY;
    std::vector<std::pair<long, long>> points;
    for (long y = 0; y <= box; ++y)
        for (long x = -box; x <= box; ++x) {
            if (y == 0 && x <= 0) continue;  // f(-x, -y) = f(x, y)
            double fx = std::abs(a * x * x + b * x * y + c * y * y);
            best = std::min(best, fx);
            points.emplace_back(x, y);
        }
    FormMinimum out;
    bool found = false;
    for (auto [x, y] : points) {
        double fx = std::abs(a * x * x + b * x * y + c * y * y);
        if (fx > best + 1e-9 * (1 + best)) continue;
        QuadSurd v = value(x, y);
        if (!found || v < out.minimum) {
            out.minimum = v;
            out.x = x;
            out.y = y;
            found = true;
        }
    }
    if (out.minimum.sign() == 0) throw ValidationError("form vanishes at a lattice point of the box");
    out.reciprocal = out.minimum.reciprocal();
    return out;
}

CylinderTable parse_cylinder_table(std::string_view text) {
    CylinderTable table;
    bool have_origin = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == '=' || ch == ',' || ch == '\t' || ch == ';') ch = ' ';
        std::vector<std::string> fields;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) fields.push_back(line.substr(i, j - i));
            i = j;
        }
        if (fields.empty()) continue;
        if (fields.size() != 2) throw ValidationError("malformed table line '" + line + "'");
        if (fields[0] == "origin") {
            table.origin = std::stoi(fields[1]);
            have_origin = true;
            continue;
        }
        DigitWord w = expand_subscript_word(fields[0]);
        if (table.length == 0) table.length = static_cast<int>(w.size());
        if (static_cast<int>(w.size()) != table.length) throw ValidationError("table windows differ in length");
        if (!table.values.emplace(w, parse_rational(fields[1])).second)
            throw ValidationError("duplicate table window " + fields[0]);
    }
    if (table.values.empty()) throw ValidationError("empty cylinder table");
    if (!have_origin) table.origin = 0;
    if (table.origin < 0 || table.origin >= table.length) throw ValidationError("table origin outside the window");
    return table;
}

namespace {

void for_each_word(const std::vector<Digit>& alphabet, int length, const std::function<void(const DigitWord&)>& fn) {
    DigitWord w(static_cast<std::size_t>(length));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == w.size()) {
            fn(w);
            return;
        }
        for (Digit d : alphabet) {
            w[i] = d;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

CylinderTable constant_table(const std::vector<Digit>& alphabet, const BigRational& value) {
    if (alphabet.empty()) throw ValidationError("empty alphabet");
    CylinderTable t;
    t.length = 1;
    for (Digit d : alphabet) t.values[{d}] = value;
    return t;
}

CylinderTable truncated_f_table(const std::vector<Digit>& alphabet, int k) {
    if (k < 1) throw ValidationError("truncation depth must be >= 1");
    if (alphabet.empty()) throw ValidationError("empty alphabet");
    if (std::pow(static_cast<double>(alphabet.size()), 2 * k + 1) > 1e7) throw ResourceError("table too large");
    CylinderTable t;
    t.origin = k;
    t.length = 2 * k + 1;
    for_each_word(alphabet, t.length, [&](const DigitWord& w) {
        DigitWord forward(w.begin() + k, w.end());
        DigitWord backward{0};
        for (int i = k; i-- > 0;) backward.push_back(w[static_cast<std::size_t>(i)]);
        t.values[w] = finite_value(forward) + finite_value(backward);
    });
    return t;
}

namespace {

// States with an infinite past: those reachable from a cycle.
std::vector<int> recurrent_image(const NormalizedSpec& spec) {
    std::set<int> cur;
    for (int s = 0; s < static_cast<int>(spec.state_count()); ++s) cur.insert(s);
    for (std::size_t i = 0; i < spec.state_count(); ++i) {
        std::set<int> next;
        for (int s : cur)
            for (std::size_t l = 0; l < spec.alphabet().size(); ++l)
                if (int t = spec.next(s, l); t != NormalizedSpec::kNone) next.insert(t);
        if (next == cur) break;
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

// Primitive words strictly below all their proper rotations.
bool is_necklace(const DigitWord& w) {
    DigitWord rotated(w.size());
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate_copy(w.begin(), w.begin() + static_cast<long>(r), w.end(), rotated.begin());
        if (!(w < rotated)) return false;
    }
    return true;
}

const BigRational& lookup(const CylinderTable& f, const DigitWord& window) {
    auto it = f.values.find(window);
    if (it == f.values.end()) {
        std::string w;
        for (Digit d : window) w += std::to_string(d);
        throw ValidationError("f table incomplete: no value for window " + w);
    }
    return it->second;
}

BigRational orbit_max(const CylinderTable& f, const DigitWord& period) {
    BigRational best;
    const long p = static_cast<long>(period.size());
    DigitWord window(static_cast<std::size_t>(f.length));
    for (long n = 0; n < p; ++n) {
        for (long j = 0; j < f.length; ++j) {
            long idx = ((n - f.origin + j) % p + p) % p;
            window[static_cast<std::size_t>(j)] = period[static_cast<std::size_t>(idx)];
        }
        const BigRational& v = lookup(f, window);
        if (n == 0 || best < v) best = v;
    }
    return best;
}

void finalize(SpectrumApprox& s) {
    std::stable_sort(s.entries.begin(), s.entries.end(),
                     [](const SpectrumEntry& x, const SpectrumEntry& y) { return compare(x.value, y.value) < 0; });
    std::vector<SpectrumEntry> out;
    for (auto& e : s.entries)
        if (out.empty() || compare(out.back().value, e.value) != 0) out.push_back(std::move(e));
    s.entries = std::move(out);
}

}  // namespace

DynamicalSpectra dynamical_spectra(const SubshiftSpec& source, const CylinderTable& f, int max_period,
                                   std::size_t budget) {
    if (max_period < 1) throw ValidationError("max_period must be >= 1");
    if (f.length < 1 || f.origin < 0 || f.origin >= f.length) throw ValidationError("malformed cylinder table");
    NormalizedSpec spec = validate(source);
    const auto& alphabet = spec.alphabet();

    // Every window of a bi-infinite admissible sequence must be tabulated.
    std::set<DigitWord> windows;
    for (int s : recurrent_image(spec)) {
        DigitWord w;
        std::function<void(int)> rec = [&](int state) {
            if (static_cast<int>(w.size()) == f.length) {
                windows.insert(w);
                return;
            }
            for (std::size_t l = 0; l < alphabet.size(); ++l) {
                int t = spec.next(state, l);
                if (t == NormalizedSpec::kNone) continue;
                w.push_back(alphabet[l]);
                rec(t);
                w.pop_back();
            }
            if (windows.size() > budget) throw ResourceError("too many table windows");
        };
        rec(s);
    }
    for (const auto& w : windows) lookup(f, w);

    double words = 0;
    for (int p = 1; p <= max_period; ++p) words += std::pow(static_cast<double>(alphabet.size()), p);
    if (words > static_cast<double>(budget)) throw ResourceError("too many periodic words");

    std::vector<std::pair<DigitWord, BigRational>> orbits;
    for (int p = 1; p <= max_period; ++p)
        for_each_word(alphabet, p, [&](const DigitWord& w) {
            if (is_necklace(w) && spec.periodic_admissible(w)) orbits.emplace_back(w, orbit_max(f, w));
        });

    DynamicalSpectra out;
    out.markov.kind = SpectrumApprox::Kind::markov;
    out.lagrange.kind = SpectrumApprox::Kind::lagrange;
    for (const auto& [w, v] : orbits) {
        SpectrumEntry e{AlgebraicValue(QuadSurd(v)), BiWord::periodic(w).to_string()};
        out.markov.entries.push_back(e);
        out.lagrange.entries.push_back(e);
    }

    std::vector<DigitWord> cores{{}};
    for (int len = 1; len <= 2; ++len) for_each_word(alphabet, len, [&](const DigitWord& w) { cores.push_back(w); });
    if (static_cast<double>(orbits.size()) * static_cast<double>(orbits.size()) * static_cast<double>(cores.size()) >
        static_cast<double>(budget))
        throw ResourceError("too many heteroclinic words");
    for (const auto& [left, left_max] : orbits)
        for (const auto& [right, right_max] : orbits)
            for (const auto& core : cores) {
                if (left == right && core.empty()) continue;
                if (!spec.biinfinite_admissible(left, core, right)) continue;
                // Windows meeting the core, inside a long enough finite stretch.
                DigitWord stretch;
                const std::size_t reps_left = static_cast<std::size_t>(f.length) / left.size() + 1;
                const std::size_t reps_right = static_cast<std::size_t>(f.length) / right.size() + 1;
                for (std::size_t i = 0; i < reps_left; ++i) stretch.insert(stretch.end(), left.begin(), left.end());
                stretch.insert(stretch.end(), core.begin(), core.end());
                for (std::size_t i = 0; i < reps_right; ++i) stretch.insert(stretch.end(), right.begin(), right.end());
                BigRational best = left_max < right_max ? right_max : left_max;
                for (std::size_t s = 0; s + static_cast<std::size_t>(f.length) <= stretch.size(); ++s) {
                    DigitWord window(stretch.begin() + static_cast<long>(s),
                                     stretch.begin() + static_cast<long>(s) + f.length);
                    const BigRational& v = lookup(f, window);
                    if (best < v) best = v;
                }
                BiWord word(left, DigitWord{}, core, right);
                out.markov.entries.push_back({AlgebraicValue(QuadSurd(best)), word.to_string()});
            }
    finalize(out.markov);
    finalize(out.lagrange);
    return out;
}

}  // namespace markov
