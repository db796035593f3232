#pragma once

#include "markov/algebraic.hpp"
#include "markov/biword.hpp"

namespace markov {

// f(theta) = alpha_0 + beta_0, exact.
AlgebraicValue f_value(const BiWord& w);

// sup over n in Z of f(sigma^n w). Shifts within the cores plus a guard into
// each periodic tail are evaluated exactly; deeper shifts are bounded by the
// periodic tail values plus 2/(F_{G-1} F_G), and the guard G grows until the
// bound certifies the current maximum. The result is exact whenever the
// maximum is certified, otherwise an enclosure of width <= tol.
AlgebraicValue markov_value(const BiWord& w, double tol = 1e-30);

// limsup as n -> +inf of f(sigma^n w): the maximum over cyclic shifts of the
// doubly infinite right-periodic word. Exact.
AlgebraicValue lagrange_value(const BiWord& w);

// f over every cyclic shift of the bi-infinite repetition of `period`,
// indexed by the position of the origin inside the period.
std::vector<AlgebraicValue> periodic_orbit_values(const DigitWord& period);

// Continuity modulus 2 / (F_{k-1} F_k): bound on |f(u) - f(v)| when u and v
// agree on positions -k..k. Requires k >= 2.
BigRational continuity_modulus(unsigned k);

}  // namespace markov
