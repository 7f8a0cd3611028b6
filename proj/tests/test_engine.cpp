#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlink/brackets.hpp"
#include "qlink/engine.hpp"
#include "qlink/numeric.hpp"

#include <vector>

using namespace qlink;

namespace {

RatFunc monomial_rf(const QuadExponent& e) { return RatFunc::from_monomial(qpow(e)); }

RatFunc q_minus_qinv() { return RatFunc::from_poly(bracket_num(AffineInt{1, 0})); }

DecompTable single_term_table(const RootSystem& rs, const Weight& mu) {
    DecompTable t;
    t.rs = rs;
    t.lam_alpha = mu;
    t.family = TableFamily::UserSupplied;
    t.terms.push_back(DecompTerm{mu, 1, 0, 0});
    return t;
}

}  // namespace

TEST_CASE("ratio sums assemble over a common bracket denominator") {
    const QuadExponent al{0, 1, 0}, al2{0, 2, 0};

    RatioSum scaled;
    RatioSum::Term t(3, Monomial{});
    t.mul_bracket(al, 1);
    t.mul_bracket(al2, -1);
    scaled.add(std::move(t));
    CHECK(scaled.value() == RatFunc::from_int(3) * qnum({0, 1}) / qnum({0, 2}));

    RatioSum cancel;
    RatioSum::Term c(5, Monomial::q(2));
    c.mul_bracket(al, 1);
    c.mul_bracket(al, -1);
    cancel.add(std::move(c));
    CHECK(cancel.value() == RatFunc::from_monomial(Monomial::q(2), 5));

    // B(-x) = -B(x), so opposite-argument terms annihilate.
    RatioSum odd;
    RatioSum::Term plus(1, Monomial{});
    plus.mul_bracket(al, 1);
    RatioSum::Term minus(1, Monomial{});
    minus.mul_bracket(-al, 1);
    odd.add(std::move(plus));
    odd.add(std::move(minus));
    CHECK(odd.value().is_zero());

    RatioSum common;
    RatioSum::Term u(1, Monomial{});
    u.mul_bracket(al, -1);
    RatioSum::Term v(1, Monomial{});
    v.mul_bracket(al2, -1);
    common.add(std::move(u));
    common.add(std::move(v));
    CHECK(common.value() == RatFunc::from_poly(bracket_num({0, 1})).pow(-1) +
                                RatFunc::from_poly(bracket_num({0, 2})).pow(-1));

    RatioSum zeroed;
    RatioSum::Term z(4, Monomial{});
    z.mul_bracket(QuadExponent{0, 0, 0}, 2);
    zeroed.add(std::move(z));
    CHECK(zeroed.value().is_zero());

    RatioSum::Term bad(1, Monomial{});
    CHECK_THROWS_AS(bad.mul_bracket(QuadExponent{0, 0, 0}, -1), ZeroDenominatorBracket);
    CHECK_THROWS_AS(bad.mul_bracket(QuadExponent{1, 0, Rat(1)}, 1),
                    NonRepresentableBracketArgument);
}

TEST_CASE("central element eigenvalue chi_nu(c)") {
    const RootSystem gl22 = make_algebra(AlgebraKind::gl(2, 2));
    const Weight mu = family_highest(gl22.kind);

    // C(nu) = C(mu) + C(lam) makes the exponent vanish.
    const RootSystem gl11 = make_algebra(AlgebraKind::gl(1, 1));
    const Weight z = zero_weight(gl11.kind);
    CHECK(chi_nu_c(gl11, z, z, z).is_zero());

    // One-box term over the vector family: exponent 2C(alpha delta) - C(nu).
    const DecompTable t22 = gl_family_table(2, 2);
    const Weight nu_box = t22.terms[1].nu;
    const QuadExponent e = casimir(gl22, mu) + casimir(gl22, mu) - casimir(gl22, nu_box);
    CHECK(e == QuadExponent{0, 4, 4});
    const RatFunc chi = chi_nu_c(gl22, mu, mu, nu_box);
    CHECK(chi == (RatFunc::one() - monomial_rf(e)) / q_minus_qinv());

    // Finite q -> 1 limit: (1 - q^E)/(q - q^{-1}) -> -E(alpha0)/2.
    CHECK(rf_limit_q1(chi, Rat(1) / 2) == Rat(-3, 2));
    CHECK(rf_limit_q1(chi, Rat(2)) == Rat(-12));
}

TEST_CASE("xi vanishes at k = 0 on every built-in table") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}})
        CHECK(xi_k(gl_family_table(m, n), 0).is_zero());
    for (int n : {1, 2, 3}) CHECK(xi_k(osp_family_table(n), 0).is_zero());
    CHECK(xi_k(gl21_adjoint_table(), 0).is_zero());
}

TEST_CASE("xi at k = +-1 is the Markov move factor q^{+-C}") {
    std::vector<DecompTable> tables;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) tables.push_back(gl_family_table(m, n));
    for (int n = 1; n <= 3; ++n) tables.push_back(osp_family_table(n));
    tables.push_back(gl21_adjoint_table());

    for (const DecompTable& t : tables) {
        const QuadExponent c = casimir(t.rs, t.lam_alpha);
        CHECK(xi_k(t, 1) == monomial_rf(c));
        CHECK(xi_k(t, -1) == monomial_rf(-c));
    }
}

TEST_CASE("xi summand alpha^2 uniformity is enforced") {
    const RootSystem rs = make_algebra(AlgebraKind::gl(1, 1));
    DecompTable t;
    t.rs = rs;
    t.lam_alpha = family_highest(rs.kind);
    t.family = TableFamily::UserSupplied;
    t.terms.push_back(DecompTerm{family_highest(rs.kind).scaled(2), 1, 0, 0});
    t.terms.push_back(DecompTerm{family_highest(rs.kind), 1, 0, 0});
    CHECK_THROWS_AS(xi_k(t, 1), InvariantViolation);
}

TEST_CASE("xi series cache returns the recomputed value") {
    XiSeries xs(gl_family_table(2, 1));
    const RatFunc first = xs.at(2);
    CHECK(first == xs.at(2));
    CHECK(first == xi_k(gl_family_table(2, 1), 2));
}

TEST_CASE("casimir eigenvalues on typical modules") {
    const DecompTable t21 = gl_family_table(2, 1);
    const DecompTable osp1 = osp_family_table(1);

    SUBCASE("k = 0 collapses to the supertrace sum, which vanishes") {
        CHECK(casimir_eigenvalues_typical(t21, 0).is_zero());
        CHECK(casimir_eigenvalues_typical(osp1, 0).is_zero());
    }

    SUBCASE("k = 1 matches the xi_{-2} reduction") {
        for (const DecompTable& t : {t21, osp1})
            CHECK(casimir_eigenvalues_typical(t, 1) ==
                  -(xi_k(t, -2) / q_minus_qinv()));
    }

    SUBCASE("higher k match the binomial xi_{-2j} expansion") {
        for (long long k : {2LL, 3LL}) {
            RatFunc sum = RatFunc::zero();
            Int binom = 1;
            for (long long j = 0; j <= k; ++j) {
                const RatFunc xi = xi_k(t21, -2 * j);
                sum = sum + RatFunc::from_int((j % 2 == 0) ? binom : -binom) * xi;
                binom = binom * Int(k - j) / Int(j + 1);
            }
            CHECK(casimir_eigenvalues_typical(t21, k) ==
                  sum / q_minus_qinv().pow(k));
        }
    }

    SUBCASE("a single-term table gives a pure chi power") {
        const RootSystem rs = make_algebra(AlgebraKind::gl(2, 1));
        const DecompTable t = single_term_table(rs, family_highest(rs.kind));
        const RatFunc chi = chi_nu_c(rs, t.lam_alpha, t.lam_alpha, t.lam_alpha);
        for (long long k : {0LL, 1LL, 3LL, -2LL})
            CHECK(casimir_eigenvalues_typical(t, k) == chi.pow(k));
    }
}

TEST_CASE("casimir eigenvalues on unitary modules") {
    const RootSystem rs = make_algebra(AlgebraKind::gl(2, 1));

    SUBCASE("typical mu reduces to the typical formula with nothing skipped") {
        const DecompTable t = gl_family_table(2, 1);
        for (long long k : {1LL, 2LL}) {
            std::vector<SkippedTerm> skipped;
            CHECK(casimir_eigenvalues_unitary(rs, t.lam_alpha, t, k, &skipped) ==
                  casimir_eigenvalues_typical(t, k));
            CHECK(skipped.empty());
        }
    }

    SUBCASE("atypical mu = 0 with a hand-built branching is pole-free") {
        // V0(0) (x) V(psi) for the adjoint-type psi = (1,0|-1): four branching
        // weights, two of which keep mu's atypicality index.
        const Weight mu = zero_weight(rs.kind);
        DecompTable branching;
        branching.rs = rs;
        branching.lam_alpha = parse_weight(rs.kind, "(1,0|-1)");
        branching.family = TableFamily::UserSupplied;
        branching.terms = {
            DecompTerm{parse_weight(rs.kind, "(1,0|-1)"), 1, 0, 0},
            DecompTerm{parse_weight(rs.kind, "(1,-1|0)"), 1, 0, 1},
            DecompTerm{parse_weight(rs.kind, "(0,0|0)"), 1, 0, 1},
            DecompTerm{parse_weight(rs.kind, "(0,-1|1)"), 1, 0, 0},
        };
        for (long long k : {1LL, 2LL}) {
            std::vector<SkippedTerm> skipped;
            const RatFunc v = casimir_eigenvalues_unitary(rs, mu, branching, k, &skipped);
            CHECK(v.is_zero());
            REQUIRE(skipped.size() == 2);
            CHECK(skipped[0].index == 0);
            CHECK(skipped[1].index == 1);
        }
    }

    SUBCASE("k below 1 is rejected") {
        const DecompTable t = gl_family_table(2, 1);
        CHECK_THROWS_AS(casimir_eigenvalues_unitary(rs, t.lam_alpha, t, 0), InvariantViolation);
    }
}

TEST_CASE("link polynomial assembly") {
    const DecompTable t = gl_family_table(2, 1);
    XiSeries xs(t);

    SUBCASE("unknots normalize to 1") {
        CHECK(link_polynomial(xs, BraidSpec::from_exponents({1})).is_one());
        CHECK(link_polynomial(xs, BraidSpec::from_exponents({-1})).is_one());
        CHECK(link_polynomial(xs, BraidSpec::from_exponents({})).is_one());
    }

    SUBCASE("a zero exponent splits the link and kills the value") {
        CHECK(link_polynomial(xs, BraidSpec::from_exponents({2, 0})).is_zero());
    }

    SUBCASE("the Hopf value is the writhe-compensated xi_2") {
        const QuadExponent c = casimir(t.rs, t.lam_alpha);
        CHECK(link_polynomial(xs, BraidSpec::from_exponents({2})) ==
              monomial_rf(c.scaled(-2)) * xs.at(2));
    }

    SUBCASE("only the exponent multiset matters") {
        const RatFunc a = link_polynomial(xs, BraidSpec::from_exponents({1, 2, 3}));
        const RatFunc b = link_polynomial(xs, BraidSpec::from_exponents({3, 1, 2}));
        const RatFunc c = link_polynomial(xs, BraidSpec::from_exponents({2, 3, 1}));
        CHECK(a == b);
        CHECK(b == c);
    }

    SUBCASE("the alpha^2 variable cancels from every link value") {
        for (const auto& ks :
             std::vector<std::vector<long long>>{{2, 1}, {3, -2}, {2, 2, -1}}) {
            const RatFunc v = link_polynomial(xs, BraidSpec::from_exponents(ks));
            for (const auto& [mono, coeff] : v.num().terms()) CHECK(mono.ea.is_zero());
            for (const auto& [mono, coeff] : v.den().terms()) CHECK(mono.ea.is_zero());
        }
    }

    SUBCASE("malformed braids are rejected") {
        BraidSpec b;
        b.strands = 0;
        CHECK_THROWS_AS(b.validate(), InvariantViolation);
        b.strands = 3;
        b.exponents = {1};
        CHECK_THROWS_AS(link_polynomial(t, b), InvariantViolation);
    }
}

TEST_CASE("spectral recurrence of the xi sequence") {
    SUBCASE("holds for small built-in tables") {
        const RecurrenceReport r11 = spectral_recurrence_check(gl_family_table(1, 1), 6);
        CHECK(r11.ok);
        CHECK(r11.order == 4);
        CHECK(r11.windows == 3);
        CHECK(r11.summary() == "order 4, 3 windows, all residuals zero");

        const RecurrenceReport rosp = spectral_recurrence_check(osp_family_table(1), 8);
        CHECK(rosp.ok);
        CHECK(rosp.order == 6);
    }

    SUBCASE("a corrupted sequence entry is caught with its window") {
        const DecompTable t = gl_family_table(1, 1);
        const QuadExponent cl = casimir(t.rs, t.lam_alpha);
        std::vector<QuadExponent> cs;
        for (const DecompTerm& term : t.terms) cs.push_back(casimir(t.rs, term.nu));
        std::vector<RatFunc> s;
        for (long long k = 0; k <= 6; ++k)
            s.push_back(monomial_rf(cl.scaled(k)) * xi_k(t, k));

        auto corrupted = s;
        corrupted[2] = corrupted[2] + RatFunc::one();
        RecurrenceReport bad = verify_exponential_sequence(corrupted, cs);
        CHECK_FALSE(bad.ok);
        CHECK(bad.first_failing_base == 0);

        corrupted = s;
        corrupted[5] = corrupted[5] + RatFunc::one();
        bad = verify_exponential_sequence(corrupted, cs);
        CHECK_FALSE(bad.ok);
        CHECK(bad.first_failing_base == 1);
    }

    SUBCASE("a window budget below the order is rejected") {
        CHECK_THROWS_AS(spectral_recurrence_check(gl_family_table(1, 1), 3),
                        InvariantViolation);
    }
}
