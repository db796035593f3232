#include "markov/quadsurd.hpp"

#include "markov/error.hpp"

#include <cctype>

namespace markov {

QuadSurd::QuadSurd(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
    if (c_ == 0) throw ValidationError("quadratic surd with zero denominator");
    if (d_ < 0) throw ValidationError("quadratic surd with negative radicand");
    normalize();
}

QuadSurd::QuadSurd(const BigRational& r) : a_(r.get_num()), b_(0), d_(0), c_(r.get_den()) {}

QuadSurd QuadSurd::sqrt(const BigInt& n) { return QuadSurd(0, 1, n, 1); }

void QuadSurd::normalize() {
    if (b_ != 0 && d_ != 0) {
        auto [root, kernel] = square_free_split(d_);
        b_ *= root;
        d_ = kernel;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
    }
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

BigRational QuadSurd::rational_value() const {
    if (!is_rational()) throw ValidationError("surd is irrational");
    return make_rational(a_, c_);
}

namespace {

BigInt common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational() || x.d() == y.d()) return x.d();
    throw ValidationError("surd arithmetic over different radicands: " + x.to_string() + ", " + y.to_string());
}

}  // namespace

QuadSurd QuadSurd::operator-() const { return QuadSurd(-a_, -b_, d_, c_); }

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = common_radicand(x, y);
    return QuadSurd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, d, x.c_ * y.c_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = common_radicand(x, y);
    return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d, x.c_ * y.c_);
}

QuadSurd QuadSurd::reciprocal() const {
    // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
    BigInt norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw ValidationError("reciprocal of zero");
    return QuadSurd(c_ * a_, -c_ * b_, d_, norm);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    common_radicand(x, y);
    return x * y.reciprocal();
}

int QuadSurd::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    int cmp = sgn(BigInt(a_ * a_ - b_ * b_ * d_));
    return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

BigInt QuadSurd::floor() const {
    Interval e = enclosure(128);
    BigInt n;
    mpfr_get_z(n.get_mpz_t(), e.lower(), MPFR_RNDD);
    // The enclosure is tight, so at most a couple of corrections are needed.
    while ((*this - QuadSurd(BigRational(n))).sign() < 0) n -= 1;
    while ((*this - QuadSurd(BigRational(n + 1))).sign() >= 0) n += 1;
    return n;
}

RadicalSum QuadSurd::to_radical() const {
    RadicalSum out{make_rational(a_, c_)};
    if (b_ != 0) out.add_term(make_rational(b_, c_), d_);
    return out;
}

Interval QuadSurd::enclosure(mpfr_prec_t precision) const {
    Interval num = Interval(a_, precision);
    if (b_ != 0) num = num + Interval(b_, precision) * Interval::sqrt_of(d_, precision);
    return num / Interval(c_, precision);
}

double QuadSurd::to_double() const { return enclosure(128).mid_double(); }

std::string QuadSurd::to_string() const {
    if (is_rational()) return markov::to_string(make_rational(a_, c_));
    std::string radical = "sqrt(" + d_.get_str() + ")";
    std::string surd_part;
    if (b_ == 1)
        surd_part = radical;
    else if (b_ == -1)
        surd_part = "-" + radical;
    else
        surd_part = b_.get_str() + "*" + radical;
    std::string numerator;
    if (a_ == 0)
        numerator = surd_part;
    else
        numerator = a_.get_str() + (b_ > 0 ? "+" : "") + surd_part;
    if (c_ == 1) return numerator;
    if (a_ == 0 && b_ > 0) return numerator + "/" + c_.get_str();
    return "(" + numerator + ")/" + c_.get_str();
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
    int s = compare(x.to_radical(), y.to_radical());
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

// Recursive-descent parser for  expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := integer | 'sqrt(' integer ')' | '(' expr ')' | '-' factor.
class SurdParser {
public:
    explicit SurdParser(std::string text) : text_(std::move(text)) {}

    QuadSurd parse() {
        QuadSurd v = expr();
        if (pos_ != text_.size()) fail();
        return v;
    }

private:
    [[noreturn]] void fail() const { throw ValidationError("malformed surd expression '" + text_ + "'"); }
    bool eat(char ch) {
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    QuadSurd expr() {
        QuadSurd v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    QuadSurd term() {
        QuadSurd v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }
    QuadSurd factor() {
        if (eat('-')) return -factor();
        if (eat('(')) {
            QuadSurd v = expr();
            if (!eat(')')) fail();
            return v;
        }
        if (text_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            BigInt n = integer();
            if (!eat(')')) fail();
            return QuadSurd::sqrt(n);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
        if (start == pos_) fail();
        return QuadSurd(parse_rational(text_.substr(start, pos_ - start)));
    }
    BigInt integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail();
        return BigInt(text_.substr(start, pos_ - start));
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadSurd parse_quad_surd(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    return SurdParser(text).parse();
}

}  // namespace markov
