#pragma once

#include "markov/algebraic.hpp"
#include "markov/bigrational.hpp"
#include "markov/biword.hpp"
#include "markov/quadsurd.hpp"
#include "markov/subshift.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace markov {

struct SpectrumEntry {
    AlgebraicValue value;
    std::string word;  // generating BiWord in text syntax
};

// Finite inner approximation of a spectrum: sorted, exact duplicates removed.
struct SpectrumApprox {
    enum class Kind { markov, lagrange };
    Kind kind = Kind::lagrange;
    std::vector<SpectrumEntry> entries;
};

std::string to_string(SpectrumApprox::Kind kind);

// Periodic word of the Markov number z (built from 1,1 and 2,2 along the tree),
// for every Markov number up to z_max.
std::map<BigInt, DigitWord> markov_periods(const BigInt& z_max);

// The `count` smallest elements of L below 3: sqrt(9 - 4/z^2) for the smallest
// Markov numbers, each with its periodic word.
SpectrumApprox spectrum_below_3(std::size_t count);

struct NamedConstant {
    std::string name;
    std::string closed_form;                 // exact expression, empty when unknown
    std::optional<AlgebraicValue> value;     // absent for decimal-only constants
    std::optional<std::string> word;         // defining BiWord
    std::string printed;                     // digits as printed in the literature
    std::string decimal;                     // truncated at the requested digits
    bool cross_checked = false;
    std::string check;                       // what the cross-check compared
};

// sigma, alpha_inf, b_inf, B_inf, c and c_F. Word/closed-form cross-checks run
// while building the table (NumericError if one fails). digits >= 10.
std::vector<NamedConstant> named_constants(int digits);

// a x^2 + b x y + c y^2 over a common quadratic field.
struct QuadraticForm {
    QuadSurd a, b, c;
    QuadSurd discriminant() const;
};

struct FormMinimum {
    QuadSurd minimum;     // min |f(x, y)| over the box
    QuadSurd reciprocal;  // a lower bound for the form's Markov-spectrum value
    long x = 0;
    long y = 0;
};

// Minimum of |f| over 0 < max(|x|, |y|) <= box. ValidationError unless the
// discriminant is exactly 1 and box >= 1, or when f vanishes on the box.
FormMinimum form_minimum(const QuadraticForm& q, int box);

// Locally constant function: value on the window a_{-origin} .. a_{length-1-origin}.
struct CylinderTable {
    int origin = 0;
    int length = 0;
    std::map<DigitWord, BigRational> values;
};

// Lines "origin=K" and "<word> <value>" (word in subscript notation, value a
// rational or decimal); '#' starts a comment.
CylinderTable parse_cylinder_table(std::string_view text);
CylinderTable constant_table(const std::vector<Digit>& alphabet, const BigRational& value);
// f truncated to [a0; a1..ak] + [0; a_{-1}..a_{-k}] on windows of length 2k+1.
CylinderTable truncated_f_table(const std::vector<Digit>& alphabet, int k);

struct DynamicalSpectra {
    SpectrumApprox markov;
    SpectrumApprox lagrange;
};

// Inner approximations of M(f, sigma) and L(f, sigma) over the subshift: all
// admissible periodic orbits of period <= max_period (both spectra), plus the
// Markov values of heteroclinic words ...P P core Q Q... with cores of length
// <= 2. ValidationError when the table misses an admissible window.
DynamicalSpectra dynamical_spectra(const SubshiftSpec& spec, const CylinderTable& f, int max_period,
                                   std::size_t budget = 2'000'000);

}  // namespace markov
