#include "markov/bigrational.hpp"

#include "markov/error.hpp"

#include <cctype>

namespace markov {

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw ValidationError("rational with zero denominator");
    BigRational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

BigInt parse_integer(const std::string& text) {
    if (text.empty()) throw ValidationError("empty integer");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ValidationError("malformed integer '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ValidationError("malformed integer '" + text + "'");
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace

BigRational parse_rational(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (auto slash = text.find('/'); slash != std::string::npos)
        return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty()) throw ValidationError("malformed decimal '" + raw + "'");
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        BigInt num = abs(parse_integer(whole)) * scale + parse_integer(frac);
        if (frac[0] == '-' || frac[0] == '+') throw ValidationError("malformed decimal '" + raw + "'");
        return make_rational(negative ? BigInt(-num) : num, scale);
    }
    return BigRational(parse_integer(text));
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw ValidationError("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace markov
