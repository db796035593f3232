#pragma once

#include "markov/continued_fraction.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace markov {

// A Gauss-Cantor set described symbolically: sequences over `alphabet`
// avoiding every word of `forbidden`, or (block mode, when `blocks` is
// non-empty) free concatenations of the given blocks.
struct SubshiftSpec {
    std::vector<Digit> alphabet;
    std::vector<DigitWord> forbidden;
    std::vector<DigitWord> blocks;

    bool block_mode() const { return !blocks.empty(); }
    friend bool operator==(const SubshiftSpec&, const SubshiftSpec&) = default;
};

constexpr std::size_t kDefaultStateBudget = 1'000'000;

// Deterministic automaton accepting exactly the admissible finite words (the
// prefixes of admissible one-sided sequences). Every state has at least one
// outgoing transition, so every accepted word extends to an infinite sequence.
class NormalizedSpec {
public:
    static constexpr int kNone = -1;

    const SubshiftSpec& source() const { return source_; }
    const std::vector<Digit>& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return next_.size(); }
    int start() const { return start_; }
    // Successor of `state` on alphabet()[letter], or kNone.
    int next(int state, std::size_t letter) const { return next_[static_cast<std::size_t>(state)][letter]; }
    int step(int state, Digit digit) const;
    // State after reading `word` from `state`, or kNone.
    int read(int state, std::span<const Digit> word) const;
    bool admissible(std::span<const Digit> word) const { return read(start_, word) != kNone; }
    // True when the bi-infinite repetition of `period` is admissible.
    bool periodic_admissible(std::span<const Digit> period) const;
    // True when ...L L L core R R R... is admissible (labels a bi-infinite path).
    bool biinfinite_admissible(std::span<const Digit> left_period, std::span<const Digit> core,
                               std::span<const Digit> right_period) const;
    // Number of admissible words of the given length.
    double count_words(int length) const;

private:
    friend NormalizedSpec validate(const SubshiftSpec& spec, std::size_t state_budget);
    SubshiftSpec source_;
    std::vector<Digit> alphabet_;
    std::vector<std::vector<int>> next_;
    int start_ = 0;
};

// Builds and trims the automaton. ValidationError when the alphabet is empty,
// a letter is < 1, or the admissible language is empty; ResourceError when the
// automaton exceeds `state_budget` states.
NormalizedSpec validate(const SubshiftSpec& spec, std::size_t state_budget = kDefaultStateBudget);

// "2121_3" -> 2,1,2,1,1,1; a subscript repeats the preceding letter and may be
// braced for multi-digit counts ("1_{12}"). Letters are single digits 1-9.
DigitWord expand_subscript_word(std::string_view text);

// "alphabet=1,2; forbidden=21212,2121_3" or "blocks=1|2_2" (block mode;
// alphabet optional). '#' starts a comment; newlines separate like ';'.
SubshiftSpec parse_subshift(std::string_view text);
std::string to_string(const SubshiftSpec& spec);

SubshiftSpec full_shift(Digit max_digit);  // C(N): alphabet {1..N}
SubshiftSpec cantor_set_x();               // {1,2} avoiding the nine words of P
SubshiftSpec block_set_k1_22();            // free concatenations of 1 and 2,2

}  // namespace markov
