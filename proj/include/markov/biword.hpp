#pragma once

#include "markov/continued_fraction.hpp"

#include <string>
#include <string_view>

namespace markov {

// Two-sided eventually periodic sequence (a_n), n in Z, of positive integers:
//
//     ... L L L left_core | right_core R R R ...
//
// The origin (index 0) is the first digit of right_core, or of the right
// period when right_core is empty. Text syntax: "(L)* c0 | c1 (R)*", digits
// comma-separated, cores optional, e.g. "(1)* | (2,2,1,1)*".
class BiWord {
public:
    BiWord(DigitWord left_period, DigitWord left_core, DigitWord right_core, DigitWord right_period);

    // Purely periodic bi-infinite word with the origin at period[0].
    static BiWord periodic(const DigitWord& period);

    const DigitWord& left_period() const { return left_period_; }
    const DigitWord& left_core() const { return left_core_; }
    const DigitWord& right_core() const { return right_core_; }
    const DigitWord& right_period() const { return right_period_; }

    Digit at(long long index) const;
    // The same sequence with the origin moved to `index` (sigma^index).
    BiWord shifted(long long index) const;

    // alpha_0 = [a0; a1, ...] and beta_0 = [0; a_{-1}, a_{-2}, ...].
    PeriodicCF forward_expansion() const;
    PeriodicCF backward_expansion() const;

    std::string to_string() const;
    friend bool operator==(const BiWord&, const BiWord&) = default;

private:
    DigitWord left_period_;
    DigitWord left_core_;
    DigitWord right_core_;
    DigitWord right_period_;
};

BiWord parse_biword(std::string_view text);

}  // namespace markov
