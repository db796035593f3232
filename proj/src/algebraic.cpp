#include "markov/algebraic.hpp"

#include "markov/error.hpp"

#include <cmath>

namespace markov {

AlgebraicValue::AlgebraicValue(const QuadSurd& s) : terms_{s} {}

AlgebraicValue::AlgebraicValue(const QuadSurd& s1, const QuadSurd& s2) {
    // Same radicand (or a rational operand) folds into one surd.
    if (s1.is_rational() || s2.is_rational() || s1.d() == s2.d())
        terms_ = {s1 + s2};
    else
        terms_ = {s1, s2};
}

AlgebraicValue AlgebraicValue::inexact(Interval enclosure) {
    AlgebraicValue v;
    v.terms_.clear();
    v.exact_ = false;
    v.inexact_enclosure_ = std::move(enclosure);
    return v;
}

RadicalSum AlgebraicValue::exact_value() const {
    if (!exact_) throw NumericError("value is only known through an enclosure");
    RadicalSum sum;
    for (const auto& t : terms_) sum += t.to_radical();
    return sum;
}

Interval AlgebraicValue::enclosure(mpfr_prec_t precision) const {
    if (!exact_) return *inexact_enclosure_;
    Interval out = terms_.front().enclosure(precision);
    for (std::size_t i = 1; i < terms_.size(); ++i) out = out + terms_[i].enclosure(precision);
    return out;
}

Interval AlgebraicValue::refine(double tol) const {
    if (!exact_) return *inexact_enclosure_;
    mpfr_prec_t bits = 64;
    for (;;) {
        Interval e = enclosure(bits);
        if (e.width_double() <= tol) return e;
        if (bits > (1 << 20)) throw ResourceError("enclosure refinement exceeded precision cap");
        bits *= 2;
    }
}

double AlgebraicValue::to_double() const { return enclosure(128).mid_double(); }

std::string AlgebraicValue::decimal(int digits) const {
    if (digits < 0) throw ValidationError("negative digit count");
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits * 3.33) + 96;
    for (int attempt = 0; attempt < 12; ++attempt, bits *= 2) {
        Interval e = enclosure(bits);
        bool negative = mpfr_sgn(e.upper()) < 0;
        if (!negative && mpfr_sgn(e.lower()) < 0) {
            if (!exact_) break;
            if (exact_value().sign() == 0) return format_scaled(0, digits, false);
            continue;
        }
        BigInt scaled;
        if (scaled_floor(negative ? -e : e, digits, scaled)) return format_scaled(scaled, digits, negative);
        if (!exact_) break;
    }
    if (exact_) {
        // The value sits on a decimal boundary; exact rationals land here.
        RadicalSum v = exact_value();
        if (v.terms().size() == 1 && v.terms().begin()->first == 1) {
            BigRational r = v.terms().begin()->second;
            bool negative = r < 0;
            if (negative) r = -r;
            BigInt scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
            BigRational scaled_r = r * BigRational(scale);
            BigInt fl;
            mpz_fdiv_q(fl.get_mpz_t(), scaled_r.get_num_mpz_t(), scaled_r.get_den_mpz_t());
            return format_scaled(fl, digits, negative);
        }
    }
    throw NumericError("enclosure too wide to render " + std::to_string(digits) + " decimals");
}

std::string AlgebraicValue::to_string() const {
    if (!exact_) return "~" + inexact_enclosure_->to_string(12);
    std::string out = terms_.front().to_string();
    for (std::size_t i = 1; i < terms_.size(); ++i) out += " + " + terms_[i].to_string();
    return out;
}

AlgebraicValue AlgebraicValue::operator+(const BigRational& r) const {
    if (!exact_) return inexact(*inexact_enclosure_ + Interval(r, inexact_enclosure_->precision()));
    AlgebraicValue out = *this;
    out.terms_.front() = out.terms_.front() + QuadSurd(r);
    return out;
}

int compare(const AlgebraicValue& x, const AlgebraicValue& y) {
    Interval ex = x.enclosure(128), ey = y.enclosure(128);
    if (ex.certainly_less(ey)) return -1;
    if (ey.certainly_less(ex)) return 1;
    if (!x.is_exact() || !y.is_exact()) throw NumericError("cannot order overlapping inexact values");
    return compare(x.exact_value(), y.exact_value());
}

int compare(const AlgebraicValue& x, const BigRational& y) { return compare(x, AlgebraicValue(QuadSurd(y))); }

}  // namespace markov
