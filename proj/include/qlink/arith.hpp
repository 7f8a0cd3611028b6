#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qlink/errors.hpp"

namespace qlink {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Exponent on the half-integer lattice (1/2)Z, stored doubled so that all
// lattice arithmetic is exact integer arithmetic.
struct HalfExponent {
    std::int64_t twice = 0;

    friend auto operator<=>(const HalfExponent&, const HalfExponent&) = default;
    HalfExponent operator+(HalfExponent o) const { return {twice + o.twice}; }
    HalfExponent operator-(HalfExponent o) const { return {twice - o.twice}; }
    HalfExponent operator-() const { return {-twice}; }
    bool is_zero() const { return twice == 0; }

    // "3", "-2", "1/2", "-3/2"
    std::string to_string() const;
};

// q^{eq} p^{ep} A^{ea} with p = q^alpha and A = q^{alpha^2} treated as free
// commuting variables. Total order: lexicographic on (eq, ep, ea).
struct Monomial {
    HalfExponent eq, ep, ea;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {eq + o.eq, ep + o.ep, ea + o.ea}; }
    Monomial inverse() const { return {-eq, -ep, -ea}; }
    bool is_identity() const { return eq.is_zero() && ep.is_zero() && ea.is_zero(); }

    static Monomial q(std::int64_t twice) { return {{twice}, {0}, {0}}; }
    static Monomial p(std::int64_t twice) { return {{0}, {twice}, {0}}; }
    static Monomial a(std::int64_t twice) { return {{0}, {0}, {twice}}; }

    std::string to_string() const;  // "q^{2}*p^{-1/2}", "1" for the identity
};

// Sparse Laurent polynomial over Z in the three formal variables. The map
// keeps terms in the canonical monomial order; zero coefficients are never
// stored.
class LaurentPoly {
public:
    using Terms = std::map<Monomial, Int>;

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return from_int(1); }
    static LaurentPoly from_int(Int c);
    static LaurentPoly from_monomial(const Monomial& m, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    std::pair<Monomial, Int> leading() const;   // greatest monomial
    std::pair<Monomial, Int> trailing() const;  // least monomial

    void add_term(const Monomial& m, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly mul_monomial(const Monomial& m, const Int& c = 1) const;
    LaurentPoly pow(std::uint64_t e) const;

    Int content() const;  // gcd of coefficient magnitudes, 0 for the zero poly
    void divide_exact(const Int& g);
    void negate();

    std::string to_string() const;  // terms in descending monomial order

private:
    Terms terms_;
};

// Ratio of Laurent polynomials in canonical form:
//   - denominator is nonzero, its trailing monomial is the identity and its
//     leading coefficient is positive;
//   - num and den share no integer content;
//   - the zero value is 0/1, and exact monomial ratios collapse to m/1.
// Canonicalization never performs polynomial gcd reduction; equality is
// decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly num, LaurentPoly den);
    static RatFunc from_poly(LaurentPoly p) { return RatFunc(std::move(p), LaurentPoly::one()); }
    static RatFunc from_int(Int c) { return from_poly(LaurentPoly::from_int(std::move(c))); }
    static RatFunc from_monomial(const Monomial& m, Int c = 1) {
        return from_poly(LaurentPoly::from_monomial(m, std::move(c)));
    }
    static RatFunc zero() { return {}; }
    static RatFunc one() { return from_int(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero

    // a/b == c/d  iff  a*d == c*b.
    friend bool operator==(const RatFunc& x, const RatFunc& y);

    RatFunc pow(std::int64_t e) const;  // negative e inverts; throws on 0^-e

    std::string to_string() const;

private:
    void canonicalize();

    LaurentPoly num_, den_;
};

// alpha-affine integer a + b*alpha, the argument domain of the q-bracket.
struct AffineInt {
    std::int64_t a = 0, b = 0;

    friend auto operator<=>(const AffineInt&, const AffineInt&) = default;
    AffineInt operator+(AffineInt o) const { return {a + o.a, b + o.b}; }
    AffineInt operator-() const { return {-a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string to_string() const;  // "2", "al", "2*al-1", ...
};

// Exponent quadratic in alpha: a + b*alpha + c*alpha^2 with rational parts.
struct QuadExponent {
    Rat a, b, c;

    friend bool operator==(const QuadExponent&, const QuadExponent&) = default;
    QuadExponent operator+(const QuadExponent& o) const { return {a + o.a, b + o.b, c + o.c}; }
    QuadExponent operator-(const QuadExponent& o) const { return {a - o.a, b - o.b, c - o.c}; }
    QuadExponent operator-() const { return {-a, -b, -c}; }
    QuadExponent scaled(const Rat& k) const { return {a * k, b * k, c * k}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    std::string to_string() const;
};

// q^{a+b*alpha} p-part etc. as a single monomial; every doubled component
// must land on the integer lattice. Throws NonHalfIntegerExponent.
Monomial qpow(const QuadExponent& e);

// Numerator binomial of the bracket: q^{a+b*alpha} - q^{-a-b*alpha}.
LaurentPoly bracket_num(AffineInt x);

// Quantum bracket [a + b*alpha]_q = (q^x - q^{-x})/(q - q^{-1}).
RatFunc qnum(AffineInt x);

// Bracket with half-integer constant part (2a integral, b integral); the
// argument a + b*alpha is checked and NonRepresentableBracketArgument is
// thrown when it is off the representable lattice.
RatFunc qnum_ext(const Rat& a, const Rat& b);

// Serialization: {"num":[{eq2,ep2,ea2,coeff},...],"den":[...]} with doubled
// integer exponents and decimal-string coefficients, terms in descending
// monomial order. from_json also accepts a bare term list (denominator 1).
std::string ratfunc_to_json(const RatFunc& x);
RatFunc ratfunc_from_json(const std::string& text);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);  // throws ParseError

}  // namespace qlink
