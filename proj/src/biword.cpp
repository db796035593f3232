#include "markov/biword.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <cctype>

namespace markov {

namespace {

void check_positive(const DigitWord& w, const char* what) {
    for (Digit a : w)
        if (a < 1) throw ValidationError(std::string("invalid word: ") + what + " digit < 1");
}

std::string join(const DigitWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

}  // namespace

BiWord::BiWord(DigitWord left_period, DigitWord left_core, DigitWord right_core, DigitWord right_period)
    : left_period_(std::move(left_period)),
      left_core_(std::move(left_core)),
      right_core_(std::move(right_core)),
      right_period_(std::move(right_period)) {
    if (left_period_.empty() || right_period_.empty()) throw ValidationError("invalid word: empty period");
    check_positive(left_period_, "left period");
    check_positive(left_core_, "left core");
    check_positive(right_core_, "right core");
    check_positive(right_period_, "right period");
}

BiWord BiWord::periodic(const DigitWord& period) { return BiWord(period, {}, {}, period); }

Digit BiWord::at(long long i) const {
    const long long rc = static_cast<long long>(right_core_.size());
    const long long lc = static_cast<long long>(left_core_.size());
    if (i >= 0) {
        if (i < rc) return right_core_[static_cast<std::size_t>(i)];
        return right_period_[static_cast<std::size_t>((i - rc) % static_cast<long long>(right_period_.size()))];
    }
    if (i >= -lc) return left_core_[static_cast<std::size_t>(lc + i)];
    const long long pl = static_cast<long long>(left_period_.size());
    long long outward = -lc - 1 - i;  // 0 for the digit just left of the core
    return left_period_[static_cast<std::size_t>(pl - 1 - outward % pl)];
}

BiWord BiWord::shifted(long long n) const {
    const long long rc = static_cast<long long>(right_core_.size());
    const long long lc = static_cast<long long>(left_core_.size());
    const long long pr = static_cast<long long>(right_period_.size());
    const long long pl = static_cast<long long>(left_period_.size());
    const long long right_start = std::max(n, rc);   // periodic from here on
    const long long left_end = std::min(n, -lc);     // periodic strictly below here
    DigitWord new_right_core, new_right_period, new_left_core, new_left_period;
    for (long long i = n; i < right_start; ++i) new_right_core.push_back(at(i));
    for (long long t = 0; t < pr; ++t) new_right_period.push_back(at(right_start + t));
    for (long long i = left_end; i < n; ++i) new_left_core.push_back(at(i));
    for (long long t = 0; t < pl; ++t) new_left_period.push_back(at(left_end - pl + t));
    return BiWord(std::move(new_left_period), std::move(new_left_core), std::move(new_right_core),
                  std::move(new_right_period));
}

PeriodicCF BiWord::forward_expansion() const { return PeriodicCF(right_core_, right_period_); }

PeriodicCF BiWord::backward_expansion() const {
    DigitWord pre{0};
    pre.insert(pre.end(), left_core_.rbegin(), left_core_.rend());
    return PeriodicCF(std::move(pre), DigitWord(left_period_.rbegin(), left_period_.rend()));
}

std::string BiWord::to_string() const {
    std::string out = "(" + join(left_period_) + ")*";
    if (!left_core_.empty()) out += " " + join(left_core_);
    out += " |";
    if (!right_core_.empty()) out += " " + join(right_core_);
    return out + " (" + join(right_period_) + ")*";
}

namespace {

class BiWordParser {
public:
    explicit BiWordParser(std::string_view text) : text_(text) {}

    BiWord parse() {
        DigitWord lp = period();
        DigitWord lc = digits();
        skip_space();
        expect('|');
        DigitWord rc = digits();
        DigitWord rp = period();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return BiWord(std::move(lp), std::move(lc), std::move(rc), std::move(rp));
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("malformed word '" + std::string(text_) + "': " + why);
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    bool at_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    Digit number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ - start > 18) fail("digit too large");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }
    DigitWord digits() {
        DigitWord out;
        if (!at_digit()) return out;
        out.push_back(number());
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                if (!at_digit()) fail("expected a digit after ','");
                out.push_back(number());
            } else {
                return out;
            }
        }
    }
    DigitWord period() {
        skip_space();
        expect('(');
        DigitWord out = digits();
        if (out.empty()) fail("empty period");
        skip_space();
        expect(')');
        expect('*');
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BiWord parse_biword(std::string_view text) { return BiWordParser(text).parse(); }

}  // namespace markov
