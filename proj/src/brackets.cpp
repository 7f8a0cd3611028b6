#include "qlink/brackets.hpp"

#include "qlink/errors.hpp"

#include <utility>

namespace qlink {

namespace {

std::int64_t doubled(const Rat& r, const char* what) {
    const Rat twice = r * 2;
    if (boost::multiprecision::denominator(twice) != 1)
        throw NonRepresentableBracketArgument(std::string(what) +
                                              " is not half-integral: " + rat_to_string(r));
    return static_cast<std::int64_t>(boost::multiprecision::numerator(twice));
}

}  // namespace

BracketArg bracket_arg(const QuadExponent& e) {
    if (e.c != 0)
        throw NonRepresentableBracketArgument("bracket argument has an alpha^2 part: " +
                                              e.to_string());
    return BracketArg{doubled(e.a, "bracket constant part"),
                      doubled(e.b, "bracket alpha part")};
}

LaurentPoly bracket_poly(const BracketArg& a) {
    LaurentPoly p;
    p.add_term(Monomial{{a.a2}, {a.b2}, {0}}, 1);
    p.add_term(Monomial{{-a.a2}, {-a.b2}, {0}}, -1);
    return p;
}

RatioSum::Term::Term(Int scalar, Monomial shift)
    : scalar_(std::move(scalar)), shift_(shift) {}

void RatioSum::Term::mul_bracket(const QuadExponent& x, std::int64_t e) {
    if (e == 0 || is_zero()) return;
    BracketArg a = bracket_arg(x);
    if (a.is_zero()) {
        if (e < 0)
            throw ZeroDenominatorBracket("bracket of zero in a denominator: " + x.to_string());
        scalar_ = 0;
        return;
    }
    // B(-x) = -B(x); keep arguments with a positive leading half-exponent.
    if (a.b2 < 0 || (a.b2 == 0 && a.a2 < 0)) {
        a.a2 = -a.a2;
        a.b2 = -a.b2;
        if (e & 1) scalar_ = -scalar_;
    }
    auto it = powers_.find(a);
    if (it == powers_.end()) {
        powers_.emplace(a, e);
    } else if ((it->second += e) == 0) {
        powers_.erase(it);
    }
}

void RatioSum::Term::mul_extra(const LaurentPoly& p) { extra_ = extra_ * p; }

void RatioSum::add(Term t) {
    if (!t.is_zero()) terms_.push_back(std::move(t));
}

RatFunc RatioSum::value() const {
    if (terms_.empty()) return RatFunc::zero();

    std::map<BracketArg, std::int64_t> shared;  // denominator exponents
    for (const Term& t : terms_)
        for (const auto& [arg, p] : t.powers_)
            if (p < 0) {
                auto [it, fresh] = shared.emplace(arg, -p);
                if (!fresh && it->second < -p) it->second = -p;
            }

    LaurentPoly den = LaurentPoly::one();
    for (const auto& [arg, d] : shared) den = den * bracket_poly(arg).pow(d);

    LaurentPoly num;
    for (const Term& t : terms_) {
        LaurentPoly part = LaurentPoly::from_monomial(t.shift_, t.scalar_) * t.extra_;
        for (const auto& [arg, d] : shared) {
            auto it = t.powers_.find(arg);
            const std::int64_t lift = d + (it == t.powers_.end() ? 0 : it->second);
            if (lift > 0) part = part * bracket_poly(arg).pow(lift);
        }
        for (const auto& [arg, p] : t.powers_)
            if (p > 0 && shared.find(arg) == shared.end())
                part = part * bracket_poly(arg).pow(p);
        num = num + part;
    }
    return RatFunc(num, den);
}

}  // namespace qlink
