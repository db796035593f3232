#include "markov/subshift.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace markov {

int NormalizedSpec::step(int state, Digit digit) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), digit);
    if (state == kNone || it == alphabet_.end() || *it != digit) return kNone;
    return next(state, static_cast<std::size_t>(it - alphabet_.begin()));
}

int NormalizedSpec::read(int state, std::span<const Digit> word) const {
    for (Digit d : word) {
        state = step(state, d);
        if (state == kNone) return kNone;
    }
    return state;
}

bool NormalizedSpec::periodic_admissible(std::span<const Digit> period) const {
    return biinfinite_admissible(period, {}, period);
}

namespace {

// States lying on a cycle of s -> read(s, word): exactly the states reached by
// a left-infinite path labelled ...word word.
std::vector<int> cycle_states(const NormalizedSpec& spec, std::span<const Digit> word) {
    const std::size_t n = spec.state_count();
    std::vector<int> image(n);
    for (std::size_t s = 0; s < n; ++s) image[s] = spec.read(static_cast<int>(s), word);
    // 0 unvisited, 1 on the current walk, 2 finished.
    std::vector<char> mark(n, 0);
    std::vector<int> out;
    for (std::size_t s0 = 0; s0 < n; ++s0) {
        std::vector<int> path;
        int s = static_cast<int>(s0);
        while (s != NormalizedSpec::kNone && mark[static_cast<std::size_t>(s)] == 0) {
            mark[static_cast<std::size_t>(s)] = 1;
            path.push_back(s);
            s = image[static_cast<std::size_t>(s)];
        }
        if (s != NormalizedSpec::kNone && mark[static_cast<std::size_t>(s)] == 1) {
            auto it = std::find(path.begin(), path.end(), s);
            out.insert(out.end(), it, path.end());
        }
        for (int v : path) mark[static_cast<std::size_t>(v)] = 2;
    }
    return out;
}

}  // namespace

bool NormalizedSpec::biinfinite_admissible(std::span<const Digit> left_period, std::span<const Digit> core,
                                           std::span<const Digit> right_period) const {
    if (left_period.empty() || right_period.empty()) return false;
    for (int s : cycle_states(*this, left_period)) {
        int t = read(s, core);
        std::set<int> seen;
        while (t != kNone && seen.insert(t).second) t = read(t, right_period);
        if (t != kNone) return true;
    }
    return false;
}

double NormalizedSpec::count_words(int length) const {
    std::vector<double> ways(state_count(), 0.0);
    ways[static_cast<std::size_t>(start_)] = 1.0;
    for (int i = 0; i < length; ++i) {
        std::vector<double> nxt(state_count(), 0.0);
        for (std::size_t s = 0; s < state_count(); ++s) {
            if (ways[s] == 0.0) continue;
            for (std::size_t l = 0; l < alphabet_.size(); ++l)
                if (int t = next_[s][l]; t != kNone) nxt[static_cast<std::size_t>(t)] += ways[s];
        }
        ways.swap(nxt);
    }
    double total = 0.0;
    for (double w : ways) total += w;
    return total;
}

namespace {

using Transitions = std::vector<std::vector<int>>;

// Removes states without an infinite continuation and renumbers; returns the
// new index of `start` or kNone when it dies.
int trim(Transitions& next, int start) {
    const std::size_t n = next.size();
    std::vector<bool> alive(n, true);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < n; ++s) {
            if (!alive[s]) continue;
            bool has_exit = false;
            for (int t : next[s]) has_exit = has_exit || (t != NormalizedSpec::kNone && alive[static_cast<std::size_t>(t)]);
            if (!has_exit) {
                alive[s] = false;
                changed = true;
            }
        }
    }
    if (!alive[static_cast<std::size_t>(start)]) return NormalizedSpec::kNone;
    // Keep only states reachable from start, numbered in BFS order.
    std::vector<int> index(n, NormalizedSpec::kNone);
    std::vector<std::size_t> order{static_cast<std::size_t>(start)};
    index[static_cast<std::size_t>(start)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int t : next[order[i]])
            if (t != NormalizedSpec::kNone && alive[static_cast<std::size_t>(t)] && index[static_cast<std::size_t>(t)] == NormalizedSpec::kNone) {
                index[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(static_cast<std::size_t>(t));
            }
    Transitions out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out[i].resize(next[order[i]].size(), NormalizedSpec::kNone);
        for (std::size_t l = 0; l < next[order[i]].size(); ++l) {
            int t = next[order[i]][l];
            if (t != NormalizedSpec::kNone && alive[static_cast<std::size_t>(t)]) out[i][l] = index[static_cast<std::size_t>(t)];
        }
    }
    next.swap(out);
    return 0;
}

bool ends_with_forbidden(const DigitWord& word, const std::vector<DigitWord>& forbidden) {
    for (const auto& f : forbidden)
        if (f.size() <= word.size() && std::equal(f.begin(), f.end(), word.end() - static_cast<long>(f.size())))
            return true;
    return false;
}

// States are the last min(len, m-1) letters read, m the longest forbidden word.
Transitions forbidden_word_automaton(const std::vector<Digit>& alphabet, const std::vector<DigitWord>& forbidden,
                                     std::size_t budget) {
    std::size_t memory = 0;
    for (const auto& f : forbidden) memory = std::max(memory, f.size());
    memory = memory > 0 ? memory - 1 : 0;
    std::map<DigitWord, int> index{{DigitWord{}, 0}};
    std::vector<DigitWord> states{DigitWord{}};
    Transitions next;
    for (std::size_t i = 0; i < states.size(); ++i) {
        next.emplace_back(alphabet.size(), NormalizedSpec::kNone);
        for (std::size_t l = 0; l < alphabet.size(); ++l) {
            DigitWord word = states[i];
            word.push_back(alphabet[l]);
            if (ends_with_forbidden(word, forbidden)) continue;
            if (word.size() > memory) word.erase(word.begin(), word.end() - static_cast<long>(memory));
            auto [it, inserted] = index.emplace(word, static_cast<int>(states.size()));
            if (inserted) {
                if (states.size() >= budget) throw ResourceError("subshift automaton exceeds the state budget");
                states.push_back(word);
            }
            next[i][l] = it->second;
        }
    }
    return next;
}

// Subset construction over the block trie: a trie node is the part of the
// current block read so far; completing a block returns to the root.
Transitions block_automaton(const std::vector<Digit>& alphabet, const std::vector<DigitWord>& blocks, std::size_t budget) {
    std::vector<std::map<Digit, int>> child{{}};
    std::vector<bool> terminal{false};
    for (const auto& b : blocks) {
        int node = 0;
        for (Digit d : b) {
            auto it = child[static_cast<std::size_t>(node)].find(d);
            if (it == child[static_cast<std::size_t>(node)].end()) {
                child.emplace_back();
                terminal.push_back(false);
                it = child[static_cast<std::size_t>(node)].emplace(d, static_cast<int>(child.size()) - 1).first;
            }
            node = it->second;
        }
        terminal[static_cast<std::size_t>(node)] = true;
    }
    using Subset = std::set<int>;
    std::map<Subset, int> index{{Subset{0}, 0}};
    std::vector<Subset> states{Subset{0}};
    Transitions next;
    for (std::size_t i = 0; i < states.size(); ++i) {
        next.emplace_back(alphabet.size(), NormalizedSpec::kNone);
        for (std::size_t l = 0; l < alphabet.size(); ++l) {
            Subset target;
            for (int node : states[i]) {
                auto it = child[static_cast<std::size_t>(node)].find(alphabet[l]);
                if (it == child[static_cast<std::size_t>(node)].end()) continue;
                int c = it->second;
                if (!child[static_cast<std::size_t>(c)].empty()) target.insert(c);
                if (terminal[static_cast<std::size_t>(c)]) target.insert(0);
            }
            if (target.empty()) continue;
            auto [it, inserted] = index.emplace(target, static_cast<int>(states.size()));
            if (inserted) {
                if (states.size() >= budget) throw ResourceError("subshift automaton exceeds the state budget");
                states.push_back(target);
            }
            next[i][l] = it->second;
        }
    }
    return next;
}

}  // namespace

NormalizedSpec validate(const SubshiftSpec& spec, std::size_t state_budget) {
    NormalizedSpec out;
    out.source_ = spec;
    std::set<Digit> letters(spec.alphabet.begin(), spec.alphabet.end());
    if (spec.block_mode()) {
        for (const auto& b : spec.blocks) {
            if (b.empty()) throw ValidationError("empty block");
            letters.insert(b.begin(), b.end());
        }
        if (!spec.forbidden.empty()) throw ValidationError("block mode does not take forbidden words");
    }
    if (letters.empty()) throw ValidationError("empty alphabet");
    if (*letters.begin() < 1) throw ValidationError("alphabet letters must be >= 1");
    out.alphabet_.assign(letters.begin(), letters.end());
    for (const auto& f : spec.forbidden) {
        if (f.empty()) throw ValidationError("empty forbidden word");
        for (Digit d : f)
            if (!letters.count(d)) throw ValidationError("forbidden word uses a letter outside the alphabet");
    }
    if (spec.block_mode())
        for (const auto& b : spec.blocks)
            for (Digit d : b)
                if (!spec.alphabet.empty() && !std::binary_search(out.alphabet_.begin(), out.alphabet_.end(), d))
                    throw ValidationError("block uses a letter outside the alphabet");
    Transitions next = spec.block_mode() ? block_automaton(out.alphabet_, spec.blocks, state_budget)
                                         : forbidden_word_automaton(out.alphabet_, spec.forbidden, state_budget);
    out.start_ = trim(next, 0);
    if (out.start_ == NormalizedSpec::kNone) throw ValidationError("empty language: no admissible infinite sequence");
    out.next_ = std::move(next);
    return out;
}

DigitWord expand_subscript_word(std::string_view text) {
    DigitWord out;
    auto fail = [&](const std::string& why) {
        throw ValidationError("malformed subscript word '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch < '1' || ch > '9') fail("letters must be digits 1-9");
        Digit letter = ch - '0';
        ++i;
        long repeat = 1;
        if (i < text.size() && text[i] == '_') {
            ++i;
            if (i < text.size() && text[i] == '{') {
                std::size_t close = text.find('}', i);
                if (close == std::string_view::npos || close == i + 1) fail("unterminated subscript");
                std::string count(text.substr(i + 1, close - i - 1));
                for (char c : count)
                    if (!std::isdigit(static_cast<unsigned char>(c))) fail("subscript must be a number");
                repeat = std::stol(count);
                i = close + 1;
            } else {
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("missing subscript");
                repeat = text[i] - '0';
                ++i;
            }
            if (repeat < 1) fail("subscript must be >= 1");
        }
        out.insert(out.end(), static_cast<std::size_t>(repeat), letter);
    }
    if (out.empty()) fail("empty word");
    return out;
}

namespace {

std::string trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trimmed(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

std::string compact(const DigitWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out += std::to_string(w[i]);
        if (j - i > 1) out += "_" + (j - i < 10 ? std::to_string(j - i) : "{" + std::to_string(j - i) + "}");
        i = j;
    }
    return out;
}

}  // namespace

SubshiftSpec parse_subshift(std::string_view text) {
    std::string cleaned;
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') {
            comment = false;
            cleaned += ';';
            continue;
        }
        if (!comment) cleaned += ch;
    }
    SubshiftSpec spec;
    bool any = false;
    for (const auto& clause : split(cleaned, ';')) {
        if (clause.empty()) continue;
        auto eq = clause.find('=');
        if (eq == std::string::npos) throw ValidationError("malformed subshift clause '" + clause + "'");
        std::string key = trimmed(std::string_view(clause).substr(0, eq));
        std::string value = trimmed(std::string_view(clause).substr(eq + 1));
        any = true;
        if (key == "alphabet") {
            for (const auto& item : split(value, ',')) {
                if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw ValidationError("malformed alphabet letter '" + item + "'");
                spec.alphabet.push_back(std::stoll(item));
            }
        } else if (key == "forbidden") {
            if (value.empty()) continue;
            for (const auto& item : split(value, ',')) spec.forbidden.push_back(expand_subscript_word(item));
        } else if (key == "blocks") {
            for (const auto& item : split(value, '|')) spec.blocks.push_back(expand_subscript_word(item));
        } else {
            throw ValidationError("unknown subshift key '" + key + "'");
        }
    }
    if (!any) throw ValidationError("empty subshift description");
    std::sort(spec.alphabet.begin(), spec.alphabet.end());
    spec.alphabet.erase(std::unique(spec.alphabet.begin(), spec.alphabet.end()), spec.alphabet.end());
    return spec;
}

std::string to_string(const SubshiftSpec& spec) {
    std::vector<std::string> clauses;
    if (!spec.alphabet.empty()) {
        std::string a = "alphabet=";
        for (std::size_t i = 0; i < spec.alphabet.size(); ++i) a += (i ? "," : "") + std::to_string(spec.alphabet[i]);
        clauses.push_back(a);
    }
    if (!spec.forbidden.empty()) {
        std::string f = "forbidden=";
        for (std::size_t i = 0; i < spec.forbidden.size(); ++i) f += (i ? "," : "") + compact(spec.forbidden[i]);
        clauses.push_back(f);
    }
    if (spec.block_mode()) {
        std::string b = "blocks=";
        for (std::size_t i = 0; i < spec.blocks.size(); ++i) b += (i ? "|" : "") + compact(spec.blocks[i]);
        clauses.push_back(b);
    }
    std::string out;
    for (std::size_t i = 0; i < clauses.size(); ++i) out += (i ? "; " : "") + clauses[i];
    return out;
}

SubshiftSpec full_shift(Digit max_digit) {
    if (max_digit < 1) throw ValidationError("full shift needs max digit >= 1");
    SubshiftSpec spec;
    for (Digit d = 1; d <= max_digit; ++d) spec.alphabet.push_back(d);
    return spec;
}

SubshiftSpec cantor_set_x() {
    return parse_subshift(
        "alphabet=1,2; forbidden=21212,2121_3,1_3212,12121_2,1_22121,2_3121_22_21,12_21_2212_3,12_3121_22_2,2_21_2212_31");
}

SubshiftSpec block_set_k1_22() { return parse_subshift("blocks=1|2_2"); }

}  // namespace markov
