#include "markov/dimension.hpp"

#include "markov/algebraic.hpp"
#include "markov/cover.hpp"
#include "markov/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace markov {

namespace {

// Relative slack absorbing floating-point error in the Collatz-Wielandt tests.
constexpr double kSlack = 1e-12;

struct BlockGraph {
    struct Edge {
        std::size_t from, to;
        double lower, mid, upper;  // bounds on |h_a'| over the target hull
    };
    std::vector<DigitWord> words;
    std::vector<Edge> edges;
};

// Nodes are (u, q): the digits u = a1..am about to be read and the automaton
// state after them. A node generates {[0; u, tail]} with tail admissible from q,
// and maps into its successors by y -> 1/(a1 + y).
BlockGraph block_graph(const SubshiftSpec& source, int m, std::size_t budget) {
    if (m < 1) throw ValidationError("word length must be >= 1");
    NormalizedSpec spec = validate(source);
    std::vector<std::pair<double, double>> tails;
    for (const auto& h : state_hulls(spec)) tails.emplace_back(h.lo.to_double(), h.hi.to_double());

    std::map<std::pair<DigitWord, int>, std::size_t> index;
    std::vector<std::pair<DigitWord, int>> nodes;
    auto intern = [&](DigitWord u, int q) {
        auto [it, fresh] = index.emplace(std::make_pair(u, q), nodes.size());
        if (fresh) {
            if (nodes.size() >= budget) throw ResourceError("block graph exceeds the state budget");
            nodes.emplace_back(std::move(u), q);
        }
        return it->second;
    };
    for (const auto& u : admissible_words(spec, m, budget)) intern(u, spec.read(spec.start(), u));

    BlockGraph g;
    std::vector<std::pair<double, double>> hull;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [u, q] = nodes[i];
        for (std::size_t l = 0; l < spec.alphabet().size(); ++l) {
            int t = spec.next(q, l);
            if (t == NormalizedSpec::kNone) continue;
            DigitWord v(u.begin() + 1, u.end());
            v.push_back(spec.alphabet()[l]);
            std::size_t j = intern(std::move(v), t);
            g.edges.push_back({i, j, 0, 0, 0});
        }
    }
    for (const auto& [u, q] : nodes) {
        const auto& t = tails[static_cast<std::size_t>(q)];
        hull.push_back(word_hull(u, t.first, t.second));
        g.words.push_back(u);
    }
    for (auto& e : g.edges) {
        double a = static_cast<double>(nodes[e.from].first.front());
        auto [lo, hi] = hull[e.to];
        e.upper = 1 / ((a + lo) * (a + lo));
        e.lower = 1 / ((a + hi) * (a + hi));
        double mid = (lo + hi) / 2;
        e.mid = 1 / ((a + mid) * (a + mid));
    }
    return g;
}

// Tarjan, iterative. Returns the component id of each node.
std::vector<std::size_t> components(std::size_t n, const std::vector<std::vector<std::size_t>>& adj, std::size_t& count) {
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t counter = 0;
    count = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, k] = frames.back();
            if (k < adj[v].size()) {
                std::size_t w = adj[v][k++];
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
            std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
        }
    }
    return comp;
}

// A strongly connected piece of a weighted graph, with local numbering.
struct Component {
    std::size_t size = 0;
    struct Edge {
        std::size_t from, to;
        double ratio;
    };
    std::vector<Edge> edges;
};

// Components carrying a cycle, split out of a graph with ratios per edge.
// `edge_count_excess` is set when some component has more edges than nodes.
std::vector<Component> recurrent_components(std::size_t n, const std::vector<Component::Edge>& edges, bool& positive_entropy) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    std::size_t count = 0;
    auto comp = components(n, adj, count);
    std::vector<std::size_t> local(n), sizes(count, 0);
    for (std::size_t v = 0; v < n; ++v) local[v] = sizes[comp[v]]++;
    std::vector<Component> parts(count);
    for (std::size_t c = 0; c < count; ++c) parts[c].size = sizes[c];
    for (const auto& e : edges)
        if (comp[e.from] == comp[e.to]) parts[comp[e.from]].edges.push_back({local[e.from], local[e.to], e.ratio});
    positive_entropy = false;
    std::vector<Component> out;
    for (auto& p : parts) {
        if (p.edges.empty()) continue;
        positive_entropy = positive_entropy || p.edges.size() > p.size;
        out.push_back(std::move(p));
    }
    return out;
}

struct RatioBounds {
    double lo, hi;  // min and max of (M v)_i / v_i
};

// Power iteration on M + I from the all-ones vector (or `warm`), then the
// Collatz-Wielandt ratios of M, which bracket its spectral radius.
RatioBounds collatz_wielandt(const Component& c, double s, std::vector<double>& v, int max_iter = 5000) {
    std::vector<double> w(c.size);
    std::vector<double> weight(c.edges.size());
    for (std::size_t k = 0; k < c.edges.size(); ++k) weight[k] = std::pow(c.edges[k].ratio, s);
    if (v.size() != c.size) v.assign(c.size, 1.0);
    RatioBounds r{0, 0};
    for (int it = 0; it < max_iter; ++it) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t k = 0; k < c.edges.size(); ++k) w[c.edges[k].from] += weight[k] * v[c.edges[k].to];
        r = {INFINITY, 0};
        for (std::size_t i = 0; i < c.size; ++i) {
            double q = w[i] / v[i];
            r.lo = std::min(r.lo, q);
            r.hi = std::max(r.hi, q);
        }
        if (r.hi - r.lo <= 1e-14 * r.hi) break;
        double norm = 0;
        for (std::size_t i = 0; i < c.size; ++i) {
            v[i] += w[i];
            norm = std::max(norm, v[i]);
        }
        for (double& x : v) x /= norm;
    }
    return r;
}

double bisect(const std::function<bool(double)>& holds_above_root, int steps = 45) {
    // Smallest s (to 2^-steps) for which the predicate holds; 1 when it fails at 1.
    if (!holds_above_root(1.0)) return 1.0;
    double lo = 0, hi = 1;
    for (int i = 0; i < steps; ++i) {
        double mid = (lo + hi) / 2;
        (holds_above_root(mid) ? hi : lo) = mid;
    }
    return hi;
}

enum class Bound { lower, mid, upper };

std::vector<Component> graph_components(const BlockGraph& g, Bound which, bool& positive_entropy) {
    std::vector<Component::Edge> edges;
    for (const auto& e : g.edges)
        edges.push_back({e.from, e.to, which == Bound::lower ? e.lower : which == Bound::upper ? e.upper : e.mid});
    return recurrent_components(g.words.size(), edges, positive_entropy);
}

double upper_from_graph(const BlockGraph& g) {
    bool positive = false;
    auto parts = graph_components(g, Bound::upper, positive);
    if (!positive) return 0.0;
    std::vector<std::vector<double>> warm(parts.size());
    return bisect([&](double s) {
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (collatz_wielandt(parts[k], s, warm[k]).hi * (1 + kSlack) >= 1) return false;
        return true;
    });
}

double lower_from_graph(const BlockGraph& g) {
    bool positive = false;
    auto parts = graph_components(g, Bound::lower, positive);
    if (!positive) return 0.0;
    std::vector<std::vector<double>> warm(parts.size());
    // Largest s with certified spectral radius > 1 in some component.
    auto above = [&](double s) {
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (collatz_wielandt(parts[k], s, warm[k]).lo * (1 - kSlack) > 1) return true;
        return false;
    };
    if (!above(0.0)) return 0.0;
    double lo = 0, hi = 1;
    if (above(1.0)) return 1.0;
    for (int i = 0; i < 45; ++i) {
        double mid = (lo + hi) / 2;
        (above(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

double cover_dim_upper(const SubshiftSpec& spec, int depth, std::size_t budget) {
    return upper_from_graph(block_graph(spec, depth, budget));
}

double cover_dim_lower(const SubshiftSpec& spec, int depth, std::size_t budget) {
    return lower_from_graph(block_graph(spec, depth, budget));
}

DimensionEstimate cover_dimension(const SubshiftSpec& spec, int depth, std::size_t budget) {
    BlockGraph g = block_graph(spec, depth, budget);
    DimensionEstimate est;
    est.method = "cover";
    est.depth = depth;
    est.lower = lower_from_graph(g);
    est.upper = upper_from_graph(g);
    return est;
}

WeightedSFT gauss_sft(const SubshiftSpec& spec, int word_len, std::size_t budget) {
    BlockGraph g = block_graph(spec, word_len, budget);
    bool positive = false;
    std::vector<Component::Edge> edges;
    for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.mid});
    std::vector<std::vector<std::size_t>> adj(g.words.size());
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    std::size_t count = 0;
    auto comp = components(g.words.size(), adj, count);
    auto parts = recurrent_components(g.words.size(), edges, positive);
    if (parts.size() != 1) throw ValidationError("block graph has " + std::to_string(parts.size()) + " recurrent components");
    // Recover the component's node labels.
    std::vector<std::size_t> members;
    std::vector<std::size_t> comp_edges(count, 0);
    for (const auto& e : edges)
        if (comp[e.from] == comp[e.to]) ++comp_edges[comp[e.from]];
    std::size_t keep = count;
    for (std::size_t c = 0; c < count; ++c)
        if (comp_edges[c] > 0) keep = c;
    WeightedSFT out;
    std::vector<std::size_t> local(g.words.size());
    for (std::size_t v = 0; v < g.words.size(); ++v) {
        if (comp[v] != keep) continue;
        local[v] = out.labels.size();
        std::string label;
        for (Digit d : g.words[v]) label += std::to_string(d);
        out.labels.push_back(label);
    }
    for (const auto& e : edges)
        if (comp[e.from] == keep && comp[e.to] == keep) out.edges.push_back({local[e.from], local[e.to], e.ratio});
    return out;
}

WeightedSFT affine_sft(int branches, double ratio) {
    if (branches < 1) throw ValidationError("affine system needs at least one branch");
    if (!(ratio > 0 && ratio < 1)) throw ValidationError("affine ratio must lie in (0, 1)");
    WeightedSFT out;
    out.labels.push_back("0");
    for (int i = 0; i < branches; ++i) out.edges.push_back({0, 0, ratio});
    return out;
}

double thermo_dimension(const WeightedSFT& sft, double tol) {
    if (!(tol > 0)) throw ValidationError("tol must be positive");
    const std::size_t n = sft.state_count();
    if (n == 0 || sft.edges.empty()) throw ValidationError("empty graph");
    std::vector<Component::Edge> edges;
    for (const auto& e : sft.edges) {
        if (e.from >= n || e.to >= n) throw ValidationError("edge refers to a missing state");
        if (!(e.ratio > 0 && e.ratio < 1)) throw ValidationError("ratios must lie in (0, 1)");
        edges.push_back({e.from, e.to, e.ratio});
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    std::size_t count = 0;
    components(n, adj, count);
    if (count != 1) throw ValidationError("weighted graph is not strongly connected");
    Component c{n, edges};

    // Spectral radius by power iteration on M + I until the relative change is < tol/10.
    std::vector<double> v;
    auto radius = [&](double s) {
        std::vector<double> weight(edges.size()), w(n);
        for (std::size_t k = 0; k < edges.size(); ++k) weight[k] = std::pow(edges[k].ratio, s);
        v.assign(n, 1.0);
        double prev = 0, lambda = 0;
        for (int it = 0; it < 100000; ++it) {
            std::fill(w.begin(), w.end(), 0.0);
            for (std::size_t k = 0; k < edges.size(); ++k) w[edges[k].from] += weight[k] * v[edges[k].to];
            double num = 0, den = 0;
            for (std::size_t i = 0; i < n; ++i) {
                num += w[i];
                den += v[i];
            }
            lambda = num / den;
            if (it > 0 && std::abs(lambda - prev) < tol / 10 * lambda) break;
            prev = lambda;
            double norm = 0;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] += w[i];
                norm = std::max(norm, v[i]);
            }
            for (double& x : v) x /= norm;
        }
        return lambda;
    };
    double lo = 0, hi = 1;
    if (radius(lo) < 1 || radius(hi) > 1) throw ValidationError("pressure root not bracketed by [0, 1]");
    while (hi - lo > tol / 10) {
        double mid = (lo + hi) / 2;
        (radius(mid) > 1 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

std::optional<SubshiftSpec> certified_subshift(const QuadSurd& t, int word_len, const std::vector<Digit>& alphabet) {
    if (word_len < 1) throw ValidationError("word length must be >= 1");
    if (alphabet.empty()) throw ValidationError("empty alphabet");
    std::vector<Digit> letters = alphabet;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.front() < 1) throw ValidationError("alphabet letters must be >= 1");
    const Digit small = letters.front(), big = letters.back();
    const std::size_t centre = static_cast<std::size_t>(word_len - 1) / 2;
    const AlgebraicValue bound{t};

    // alpha_0 = [a0; a1, ...] increases in a_k for even k; beta_0 = [0; a_{-1}, ...]
    // increases in a_{-k} for even k. The sup over continuations uses the extreme
    // alternating tails.
    auto alternating = [&](std::size_t offset) {
        return offset % 2 == 0 ? DigitWord{big, small} : DigitWord{small, big};
    };
    SubshiftSpec out;
    out.alphabet = letters;
    std::size_t allowed = 0;
    DigitWord u(static_cast<std::size_t>(word_len), small);
    std::vector<std::size_t> digit_index(u.size(), 0);
    for (;;) {
        DigitWord right(u.begin() + static_cast<long>(centre), u.end());
        PeriodicCF alpha(right, alternating(u.size() - centre));
        DigitWord left{0};
        for (std::size_t i = centre; i-- > 0;) left.push_back(u[i]);
        PeriodicCF beta(left, alternating(centre + 1));
        AlgebraicValue sup(periodic_value(alpha), periodic_value(beta));
        if (compare(sup, bound) <= 0)
            ++allowed;
        else
            out.forbidden.push_back(u);
        // Next word in lexicographic order.
        std::size_t k = u.size();
        while (k > 0 && digit_index[k - 1] + 1 == letters.size()) {
            digit_index[k - 1] = 0;
            u[k - 1] = letters[0];
            --k;
        }
        if (k == 0) break;
        u[k - 1] = letters[++digit_index[k - 1]];
    }
    if (allowed == 0) return std::nullopt;
    try {
        validate(out);
    } catch (const ValidationError&) {
        return std::nullopt;  // no infinite sequence avoids the bad windows
    }
    return out;
}

double dimension_function_lower(const QuadSurd& t, int word_len, int dim_depth, const std::vector<Digit>& alphabet) {
    auto spec = certified_subshift(t, word_len, alphabet);
    if (!spec) return 0.0;
    return std::min(1.0, 2 * cover_dim_lower(*spec, dim_depth));
}

}  // namespace markov
