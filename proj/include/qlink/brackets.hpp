#pragma once

#include "qlink/arith.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qlink {

// Bracket-numerator argument x = a2/2 + (b2/2) alpha, stored doubled.
// B(x) = q^{a2} p^{b2} - q^{-a2} p^{-b2} in doubled exponents, i.e. the
// numerator of [x]_q over the numerator of [1]_q.
struct BracketArg {
    std::int64_t a2 = 0, b2 = 0;
    auto operator<=>(const BracketArg&) const = default;
    bool is_zero() const { return a2 == 0 && b2 == 0; }
};

// Throws NonRepresentableBracketArgument when e has an alpha^2 part or
// exponents outside the half-integer lattice.
BracketArg bracket_arg(const QuadExponent& e);

LaurentPoly bracket_poly(const BracketArg& a);

// Sum of terms scalar * shift * extra * prod_x B(x)^{p[x]}, assembled over
// the common denominator prod_x B(x)^{max(0, -p[x])} so that the result is a
// single division — no rational-function chain arithmetic.
class RatioSum {
  public:
    class Term {
      public:
        Term(Int scalar, Monomial shift);

        // multiplies by B(x)^e; canonicalizes the argument sign, so the
        // scalar may flip. A zero argument with e > 0 zeroes the term; with
        // e < 0 it throws ZeroDenominatorBracket.
        void mul_bracket(const QuadExponent& x, std::int64_t e);
        void mul_extra(const LaurentPoly& p);
        bool is_zero() const { return scalar_ == 0 || extra_.is_zero(); }

      private:
        friend class RatioSum;
        Int scalar_;
        Monomial shift_;
        LaurentPoly extra_ = LaurentPoly::one();
        std::map<BracketArg, std::int64_t> powers_;
    };

    void add(Term t);
    RatFunc value() const;

  private:
    std::vector<Term> terms_;
};

}  // namespace qlink
