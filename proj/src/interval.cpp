#include "markov/interval.hpp"

#include "markov/error.hpp"

#include <algorithm>
#include <utility>

namespace markov {

void Interval::init(mpfr_prec_t precision) {
    precision_ = std::max(precision, kMinPrecision);
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
}

Interval::Interval(mpfr_prec_t precision) {
    init(precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const BigRational& exact, mpfr_prec_t precision) {
    init(precision);
    mpfr_set_q(lo_, exact.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, exact.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const BigInt& exact, mpfr_prec_t precision) {
    init(precision);
    mpfr_set_z(lo_, exact.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, exact.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const BigRational& lower, const BigRational& upper, mpfr_prec_t precision) {
    if (lower > upper) throw ValidationError("interval with lower > upper");
    init(precision);
    mpfr_set_q(lo_, lower.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, upper.get_mpq_t(), MPFR_RNDU);
}

Interval::~Interval() {
    if (precision_ != 0) {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
}

Interval::Interval(const Interval& other) {
    init(other.precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
    if (this == &other) return *this;
    if (precision_ != other.precision_) {
        mpfr_set_prec(lo_, other.precision_);
        mpfr_set_prec(hi_, other.precision_);
        precision_ = other.precision_;
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other && precision_ == other.precision_) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        return *this;
    }
    return *this = static_cast<const Interval&>(other);
}

Interval Interval::sqrt_of(const BigInt& radicand, mpfr_prec_t precision) {
    if (radicand < 0) throw ValidationError("sqrt of a negative number");
    Interval out(precision);
    mpfr_t tmp;
    mpfr_init2(tmp, out.precision_ + 64);
    mpfr_set_z(tmp, radicand.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(out.lo_, tmp, MPFR_RNDD);
    mpfr_set_z(tmp, radicand.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(out.hi_, tmp, MPFR_RNDU);
    mpfr_clear(tmp);
    return out;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, precision_ + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double out = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return out;
}

double Interval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, precision_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

bool Interval::contains(const BigRational& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
    return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Interval::disjoint(const Interval& other) const {
    return mpfr_less_p(hi_, other.lo_) || mpfr_less_p(other.hi_, lo_);
}

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }

Interval Interval::operator-() const {
    Interval out(precision_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision_, b.precision_));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision_, b.precision_));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

namespace {

template <typename Op>
Interval corner_hull(const Interval& a, const Interval& b, Op op) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_t t;
    mpfr_init2(t, out.precision());
    mpfr_ptr lo = const_cast<mpfr_ptr>(out.lower());
    mpfr_ptr hi = const_cast<mpfr_ptr>(out.upper());
    bool first = true;
    for (mpfr_srcptr x : {a.lower(), a.upper()}) {
        for (mpfr_srcptr y : {b.lower(), b.upper()}) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return out;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) { return corner_hull(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw NumericError("interval division by an interval containing 0");
    return corner_hull(a, b, mpfr_div);
}

Interval hull(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision_, b.precision_));
    mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::pow(const Interval& exponent) const {
    if (mpfr_sgn(lo_) < 0) throw NumericError("pow of an interval with negative points");
    if (mpfr_sgn(exponent.lo_) < 0) throw NumericError("pow with a negative exponent");
    Interval out(std::max(precision_, exponent.precision_));
    // x^e is increasing in e for x >= 1 and decreasing for x <= 1; take corners.
    return corner_hull(*this, exponent, mpfr_pow);
}

std::string Interval::to_string(int digits) const {
    std::string out = "[";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*RDe", digits, lo_);
    out += buf;
    mpfr_free_str(buf);
    out += ", ";
    mpfr_asprintf(&buf, "%.*RUe", digits, hi_);
    out += buf;
    mpfr_free_str(buf);
    return out + "]";
}

bool scaled_floor(const Interval& x, int digits, BigInt& out) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpfr_t t;
    mpfr_init2(t, x.precision());
    BigInt lo, hi;
    mpfr_mul_z(t, x.lower(), scale.get_mpz_t(), MPFR_RNDD);
    mpfr_get_z(lo.get_mpz_t(), t, MPFR_RNDD);
    mpfr_mul_z(t, x.upper(), scale.get_mpz_t(), MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), t, MPFR_RNDD);
    mpfr_clear(t);
    if (lo != hi) return false;
    out = lo;
    return true;
}

std::string format_scaled(const BigInt& scaled, int digits, bool negative) {
    std::string s = BigInt(abs(scaled)).get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    std::string out = negative ? "-" : "";
    out += s.substr(0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
    return out;
}

}  // namespace markov
