#pragma once

#include "qlink/arith.hpp"

#include <string>

namespace qlink {

// Evaluate x at q = q0, p = q0^{alpha0}, A = q0^{alpha0^2} to at least
// `precision` correct decimal digits. Requires q0 > 0 and q0 != 1.
// Throws PoleAtPoint when the denominator vanishes within 10^{-precision}.
// The result is the decimal rendering, trimmed to `precision` significant
// digits.
std::string rf_eval(const RatFunc& x, const Rat& q0, const Rat& alpha0, unsigned precision);

// True when x and y agree at the point (q0, alpha0) to `digits` decimal
// digits (relative to max(1, |y|)). Same domain requirements as rf_eval.
bool rf_eval_close(const RatFunc& x, const RatFunc& y, const Rat& q0, const Rat& alpha0,
                   unsigned digits);

// Limit of x for q -> 1 with alpha fixed at alpha0, as an exact rational.
// Substituting q = e^h and expanding around h = 0 turns numerator and
// denominator into exact power series; the limit is the ratio of the first
// surviving coefficients. Throws LimitDiverges on a pole or when the
// denominator vanishes identically at alpha0.
Rat rf_limit_q1(const RatFunc& x, const Rat& alpha0);

}  // namespace qlink
