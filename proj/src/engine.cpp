#include "qlink/engine.hpp"

#include "qlink/brackets.hpp"
#include "qlink/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace qlink {

namespace {

// Multiplies in the Gamma0 ratio for (top over bot) together with the
// q-dimension ratio D0(bot)/D0(top). The [1]_q normalizers cancel between
// numerator and denominator because the bracket counts agree slot for slot.
void mul_weight_ratio(RatioSum::Term& t, const RootSystem& rs, const Weight& top,
                      const Weight& bot) {
    const Weight tr = top + rs.rho;
    const Weight br = bot + rs.rho;
    for (const Weight& beta : rs.odd_pos) {
        t.mul_bracket(bilinear(rs, tr, beta), 1);
        t.mul_bracket(bilinear(rs, br, beta), -1);
    }
    for (const Weight& beta : rs.even_pos) {
        t.mul_bracket(bilinear(rs, br, beta), 1);
        t.mul_bracket(bilinear(rs, tr, beta), -1);
    }
}

Int term_sign_total(const DecompTerm& term) {
    Int c = Int(term.m_plus) + Int(term.m_minus);
    return term.parity ? Int(-c) : c;
}

}  // namespace

RatFunc chi_nu_c(const RootSystem& rs, const Weight& mu, const Weight& lam,
                 const Weight& nu) {
    const QuadExponent e = casimir(rs, mu) + casimir(rs, lam) - casimir(rs, nu);
    const LaurentPoly num = LaurentPoly::one() - LaurentPoly::from_monomial(qpow(e));
    return RatFunc(num, bracket_num(AffineInt{1, 0}));
}

RatFunc xi_k(const DecompTable& t, long long k) {
    const QuadExponent cl = casimir(t.rs, t.lam_alpha);
    std::optional<Rat> a_shared;
    RatioSum sum;
    for (const DecompTerm& term : t.terms) {
        Int coeff = Int(term.m_plus) +
                    ((k % 2 == 0) ? Int(term.m_minus) : Int(-term.m_minus));
        if (term.parity) coeff = -coeff;
        if (coeff == 0) continue;
        const QuadExponent shift =
            casimir(t.rs, term.nu).scaled(Rat(k) / 2) - cl.scaled(Rat(k));
        if (!a_shared) {
            a_shared = shift.c;
        } else if (*a_shared != shift.c) {
            throw InvariantViolation(
                "xi summands disagree in the alpha^2 exponent: " +
                rat_to_string(*a_shared) + " vs " + rat_to_string(shift.c) + " at nu = " +
                term.nu.to_string());
        }
        RatioSum::Term rt(std::move(coeff), qpow(shift));
        mul_weight_ratio(rt, t.rs, t.lam_alpha, term.nu);
        sum.add(std::move(rt));
    }
    return sum.value();
}

RatFunc XiSeries::at(long long k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, xi_k(table_, k)).first;
    return it->second;
}

BraidSpec BraidSpec::from_exponents(std::vector<long long> ks) {
    BraidSpec b;
    b.strands = static_cast<int>(ks.size()) + 1;
    b.exponents = std::move(ks);
    return b;
}

long long BraidSpec::writhe() const {
    long long w = 0;
    for (long long k : exponents) w += k;
    return w;
}

void BraidSpec::validate() const {
    if (strands < 1) throw InvariantViolation("braid needs at least one strand");
    if (exponents.size() + 1 != static_cast<std::size_t>(strands))
        throw InvariantViolation("braid on M strands needs exactly M-1 exponents");
}

RatFunc link_polynomial(XiSeries& xs, const BraidSpec& b) {
    b.validate();
    const QuadExponent cl = casimir(xs.table().rs, xs.table().lam_alpha);
    RatFunc out = RatFunc::from_monomial(qpow(cl.scaled(Rat(-b.writhe()))));
    for (long long k : b.exponents) out = out * xs.at(k);
    return out;
}

RatFunc link_polynomial(const DecompTable& t, const BraidSpec& b) {
    XiSeries xs(t);
    return link_polynomial(xs, b);
}

RatFunc casimir_eigenvalues_typical(const DecompTable& t, long long k) {
    const QuadExponent cmu = casimir(t.rs, t.lam_alpha);
    if (k >= 0) {
        RatioSum sum;
        for (const DecompTerm& term : t.terms) {
            Int coeff = term_sign_total(term);
            if (coeff == 0) continue;
            RatioSum::Term rt(std::move(coeff), Monomial{});
            if (k > 0) {
                const QuadExponent e = cmu + cmu - casimir(t.rs, term.nu);
                const LaurentPoly chi_num =
                    LaurentPoly::one() - LaurentPoly::from_monomial(qpow(e));
                rt.mul_extra(chi_num.pow(static_cast<std::uint64_t>(k)));
                rt.mul_bracket(QuadExponent{1, 0, 0}, -k);
            }
            mul_weight_ratio(rt, t.rs, t.lam_alpha, term.nu);
            sum.add(std::move(rt));
        }
        return sum.value();
    }
    RatFunc out = RatFunc::zero();
    for (const DecompTerm& term : t.terms) {
        Int coeff = term_sign_total(term);
        if (coeff == 0) continue;
        RatioSum single;
        RatioSum::Term rt(std::move(coeff), Monomial{});
        mul_weight_ratio(rt, t.rs, t.lam_alpha, term.nu);
        single.add(std::move(rt));
        const RatFunc chi = chi_nu_c(t.rs, t.lam_alpha, t.lam_alpha, term.nu);
        out = out + single.value() * chi.pow(k);
    }
    return out;
}

RatFunc casimir_eigenvalues_unitary(const RootSystem& rs, const Weight& mu,
                                    const DecompTable& branching, long long k,
                                    std::vector<SkippedTerm>* skipped) {
    if (k < 1) throw InvariantViolation("unitary eigenvalue formula needs k >= 1");
    const Weight& lam = branching.lam_alpha;
    const int a_mu = atypicality_index(rs, mu);
    const QuadExponent e_base = casimir(rs, mu) + casimir(rs, lam);
    const Weight mr = mu + rs.rho;
    RatioSum sum;
    for (std::size_t i = 0; i < branching.terms.size(); ++i) {
        const DecompTerm& term = branching.terms[i];
        const int a_nu = atypicality_index(rs, term.nu);
        if (a_nu != a_mu) {
            if (skipped)
                skipped->push_back({i, "atypicality mismatch at nu = " + term.nu.to_string() +
                                           ": " + std::to_string(a_nu) + " vs " +
                                           std::to_string(a_mu)});
            continue;
        }
        Int coeff = term_sign_total(term);
        if (coeff == 0) continue;
        RatioSum::Term rt(std::move(coeff), Monomial{});
        const LaurentPoly chi_num =
            LaurentPoly::one() -
            LaurentPoly::from_monomial(qpow(e_base - casimir(rs, term.nu)));
        rt.mul_extra(chi_num.pow(static_cast<std::uint64_t>(k)));
        rt.mul_bracket(QuadExponent{1, 0, 0}, -k);
        const Weight nr = term.nu + rs.rho;
        for (const Weight& beta : rs.odd_pos) {
            const QuadExponent xm = bilinear(rs, mr, beta);
            if (!xm.is_zero()) rt.mul_bracket(xm, 1);
            const QuadExponent xn = bilinear(rs, nr, beta);
            if (!xn.is_zero()) rt.mul_bracket(xn, -1);
        }
        for (const Weight& beta : rs.even_pos) {
            rt.mul_bracket(bilinear(rs, nr, beta), 1);
            rt.mul_bracket(bilinear(rs, mr, beta), -1);
        }
        sum.add(std::move(rt));
    }
    return sum.value();
}

std::string RecurrenceReport::summary() const {
    std::string s = "order " + std::to_string(order) + ", " + std::to_string(windows) +
                    (windows == 1 ? " window" : " windows");
    if (ok) return s + ", all residuals zero";
    return s + ", first nonzero residual at base k = " + std::to_string(first_failing_base);
}

RecurrenceReport verify_exponential_sequence(const std::vector<RatFunc>& s,
                                             const std::vector<QuadExponent>& casimirs) {
    std::vector<QuadExponent> distinct;
    for (const QuadExponent& e : casimirs)
        if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
            distinct.push_back(e);

    RecurrenceReport rep;
    rep.order = static_cast<int>(2 * distinct.size());
    if (s.size() < static_cast<std::size_t>(rep.order) + 1)
        throw InvariantViolation("sequence shorter than the recurrence order " +
                                 std::to_string(rep.order));

    // Characteristic polynomial in y = x^2: prod over distinct C of (y - q^C).
    std::vector<LaurentPoly> coef{LaurentPoly::one()};
    for (const QuadExponent& e : distinct) {
        const LaurentPoly root = LaurentPoly::from_monomial(qpow(e));
        std::vector<LaurentPoly> next(coef.size() + 1);
        for (std::size_t j = 0; j < coef.size(); ++j) {
            next[j + 1] = next[j + 1] + coef[j];
            next[j] = next[j] - root * coef[j];
        }
        coef = std::move(next);
    }

    const std::size_t span = static_cast<std::size_t>(rep.order);
    for (std::size_t base = 0; base + span < s.size(); ++base) {
        RatFunc r = RatFunc::zero();
        for (std::size_t j = 0; j < coef.size(); ++j)
            r = r + RatFunc::from_poly(coef[j]) * s[base + 2 * j];
        ++rep.windows;
        if (!r.is_zero()) {
            rep.ok = false;
            rep.first_failing_base = static_cast<long long>(base);
            return rep;
        }
    }
    return rep;
}

RecurrenceReport spectral_recurrence_check(const DecompTable& t, long long kmax) {
    if (kmax < 0) throw InvariantViolation("kmax must be nonnegative");
    std::vector<QuadExponent> cs;
    cs.reserve(t.terms.size());
    for (const DecompTerm& term : t.terms) cs.push_back(casimir(t.rs, term.nu));

    XiSeries xs(t);
    const QuadExponent cl = casimir(t.rs, t.lam_alpha);
    std::vector<RatFunc> s;
    s.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long long k = 0; k <= kmax; ++k)
        s.push_back(RatFunc::from_monomial(qpow(cl.scaled(Rat(k)))) * xs.at(k));
    return verify_exponential_sequence(s, cs);
}

}  // namespace qlink
