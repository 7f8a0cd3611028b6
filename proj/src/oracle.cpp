#include "qlink/oracle.hpp"

#include "qlink/brackets.hpp"
#include "qlink/engine.hpp"
#include "qlink/errors.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <utility>

namespace qlink {

namespace {

QuadExponent aff(long long a, long long b) { return {Rat(a), Rat(b), Rat(0)}; }

// The printed chi product carries a row-local correction factor whose l-index
// scope the typesetting leaves open: once per row i, or once per cell (i,j).
enum class LNesting { PerRow, PerCell };

void mul_chi_glmn(RatioSum::Term& term, int m, int n, const YoungDiagram& d,
                  LNesting nesting) {
    const int t = static_cast<int>(d.rows.size());
    auto lam = [&](int i) { return i <= t ? d.rows[i - 1] : 0; };
    auto mul_l_product = [&](int i) {
        for (int l = 1; l <= t; ++l) {
            term.mul_bracket(aff(lam(l) + lam(i) - i + 1 - l, -2), 1);
            term.mul_bracket(aff(lam(i) - i + 1 - l, -2), -1);
        }
    };
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            term.mul_bracket(aff(i - j, 1), 1);
            term.mul_bracket(aff(i - j - lam(i), 2), -1);
            if (nesting == LNesting::PerCell) mul_l_product(i);
        }
        if (nesting == LNesting::PerRow) mul_l_product(i);
    }
}

RatFunc chi_alpha_glmn(int m, int n, const YoungDiagram& d, LNesting nesting) {
    RatioSum sum;
    RatioSum::Term term(1, Monomial{});
    mul_chi_glmn(term, m, n, d, nesting);
    sum.add(std::move(term));
    return sum.value();
}

// sum_i lam_i(lam_i + 1 - 2 alpha - 2i) - n alpha^2.
QuadExponent gamma_glmn(const YoungDiagram& d, int n) {
    QuadExponent g{0, 0, Rat(-n)};
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const long long li = d.rows[i];
        g.a += Rat(li * (li + 1 - 2 * static_cast<long long>(i + 1)));
        g.b += Rat(-2 * li);
    }
    return g;
}

void mul_qdim_ratio(RatioSum::Term& term, const RootSystem& rs, const Weight& w) {
    const Weight wr = w + rs.rho;
    for (const Weight& beta : rs.even_pos) {
        term.mul_bracket(bilinear(rs, wr, beta), 1);
        term.mul_bracket(bilinear(rs, rs.rho, beta), -1);
    }
}

void validate_l_nesting() {
    static std::once_flag done;
    std::call_once(done, [] {
        auto chi_frozen = [](std::vector<long long> dens) {
            RatFunc v = qnum({0, 1}).pow(2) * qnum({-1, 1}) * qnum({1, 1});
            for (long long a : dens) v = v / qnum({a, 2});
            return v;
        };
        const RatFunc outer = chi_frozen({0, 0, -1, 1});
        const RatFunc box = chi_frozen({0, 0, -2, 2});
        const RatFunc middle = chi_frozen({1, -1, -2, 2});
        const std::vector<std::pair<YoungDiagram, RatFunc>> frozen = {
            {YoungDiagram{{}}, outer},      {YoungDiagram{{1}}, box},
            {YoungDiagram{{2}}, middle},    {YoungDiagram{{1, 1}}, middle},
            {YoungDiagram{{2, 1}}, box},    {YoungDiagram{{2, 2}}, outer},
        };
        bool per_row_ok = true, per_cell_ok = true;
        for (const auto& [d, want] : frozen) {
            if (!(chi_alpha_glmn(2, 2, d, LNesting::PerRow) == want)) per_row_ok = false;
            if (!(chi_alpha_glmn(2, 2, d, LNesting::PerCell) == want)) per_cell_ok = false;
        }
        if (!per_row_ok || per_cell_ok)
            throw IndexNestingUnresolved(
                per_row_ok ? "both row-product readings reproduce the frozen gl(2|2) values"
                           : "the row-local reading fails the frozen gl(2|2) values");
    });
}

Int alternating_sign(long long k, long long level) {
    return (((k - 1) * level) & 1LL) ? Int(-1) : Int(1);
}

LaurentPoly cosh_pair(const Monomial& m) {
    LaurentPoly p = LaurentPoly::from_monomial(m);
    p.add_term(m.inverse(), 1);
    return p;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

RatFunc xi_explicit_glmn(int m, int n, long long k) {
    if (m < n || n < 1) throw InvalidRank("explicit gl form needs m >= n >= 1");
    validate_l_nesting();
    const RootSystem rs = make_algebra(AlgebraKind::gl(m, n));
    RatioSum sum;
    for (const YoungDiagram& d : enumerate_allowable(m, n)) {
        RatioSum::Term term(alternating_sign(k, d.boxes()),
                            qpow(gamma_glmn(d, n).scaled(Rat(k))));
        mul_chi_glmn(term, m, n, d, LNesting::PerRow);
        mul_qdim_ratio(term, rs, diagram_weight(m, n, d));
        sum.add(std::move(term));
    }
    return sum.value();
}

RatFunc xi_explicit_glm1(int m, long long k) {
    if (m < 1) throw InvalidRank("explicit gl(m|1) form needs m >= 1");
    RatioSum sum;
    for (int t = 0; t <= m; ++t) {
        const QuadExponent gamma{Rat(-t * (t - 1)), Rat(-2 * t), Rat(-1)};
        RatioSum::Term term(alternating_sign(k, t), qpow(gamma.scaled(Rat(k))));
        for (int i = 1; i <= t; ++i) {
            term.mul_bracket(aff(m + 1 - i, 0), 1);
            term.mul_bracket(aff(i - 1, 1), 1);
            term.mul_bracket(aff(t + 1 - i, 0), -1);
            term.mul_bracket(aff(i + t - 2, 2), -1);
        }
        for (int i = t + 1; i <= m; ++i) {
            term.mul_bracket(aff(i - 1, 1), 1);
            term.mul_bracket(aff(i + t - 1, 2), -1);
        }
        sum.add(std::move(term));
    }
    return sum.value();
}

RatFunc xi_explicit_gl21_adjoint(long long k) {
    const bool even = (k % 2) == 0;
    const Int pm = even ? 1 : -1;  // (-1)^k
    struct Piece {
        Int scalar;
        QuadExponent gamma;
        std::vector<std::pair<QuadExponent, std::int64_t>> brackets;
    };
    const QuadExponent b2a_p2 = aff(2, 2), b2a_p1 = aff(1, 2), b2a = aff(0, 2),
                       b2a_m1 = aff(-1, 2), b2a_m2 = aff(-2, 2);
    const QuadExponent ba_p1 = aff(1, 1), ba_m1 = aff(-1, 1);
    // Terms whose bracket ratio has fewer numerator than denominator factors
    // carry an explicit unit bracket so [x] -> B(x) substitution stays exact.
    std::vector<Piece> pieces = {
        {1,
         {0, 2, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {aff(3, 0), 1}, {b2a_p1, -1}, {b2a_m2, -1}, {aff(2, 0), -1}}},
        {1,
         {0, -2, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {aff(3, 0), 1}, {b2a_p2, -1}, {b2a_m1, -1}, {aff(2, 0), -1}}},
        {pm,
         {-2, -2, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {aff(1, 0), 1}, {b2a_p1, -1}, {b2a, -1}, {aff(2, 0), -1}}},
        {pm,
         {-2, 2, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {aff(1, 0), 1}, {b2a, -1}, {b2a_m1, -1}, {aff(2, 0), -1}}},
        {-pm,
         {2, 0, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {aff(4, 0), 1}, {b2a_p2, -1}, {b2a_m2, -1}, {aff(2, 0), -1}}},
        {even ? Int(-2) : Int(0),
         {-1, 0, -1},
         {{ba_p1, 1}, {ba_m1, 1}, {b2a_p1, -1}, {b2a_m1, -1}}},
    };
    RatioSum sum;
    for (Piece& p : pieces) {
        RatioSum::Term term(std::move(p.scalar), qpow(p.gamma.scaled(Rat(k))));
        for (const auto& [arg, e] : p.brackets) term.mul_bracket(arg, e);
        sum.add(std::move(term));
    }
    return sum.value();
}

RatFunc xi_explicit_osp(int n, long long k) {
    if (n < 1) throw InvalidRank("explicit osp form needs n >= 1");
    RatioSum sum;
    for (int c = 0; c <= n; ++c) {
        for (int d = 0; d <= n - c; ++d) {
            const QuadExponent gamma{Rat(-2 * d * (n + c + d) - c * (c - 1)),
                                     Rat(2 * c + 4 * d), Rat(-1)};
            RatioSum::Term term(alternating_sign(k, c + 2 * d),
                                qpow(gamma.scaled(Rat(k))));
            for (int i = 1; i <= n; ++i) {
                const int shift = i <= c ? 1 : 0;
                term.mul_bracket(aff(2 * n + 1 - i, -1), 1);
                term.mul_bracket(aff(i - 1, -1), 1);
                term.mul_bracket(aff(c + 2 * d + 2 * n + 1 - i + shift, -2), -1);
                term.mul_bracket(aff(c + 2 * d + i - 1 - shift, -2), -1);
            }
            for (int i = 1; i < c; ++i)
                for (int j = i + 1; j <= c; ++j) {
                    term.mul_bracket(aff(2 * n + 4 - i - j, 0), 1);
                    term.mul_bracket(aff(2 * n + 2 - i - j, 0), -1);
                }
            for (int l = 1; l <= c; ++l) {
                term.mul_bracket(aff(2 * n + 4 - 2 * l, 0), 1);
                term.mul_bracket(aff(2 * n + 2 - 2 * l, 0), -1);
            }
            for (int i = 1; i <= c; ++i)
                for (int j = c + 1; j <= n; ++j) {
                    term.mul_bracket(aff(j - i + 1, 0), 1);
                    term.mul_bracket(aff(j - i, 0), -1);
                    term.mul_bracket(aff(2 * n + 3 - i - j, 0), 1);
                    term.mul_bracket(aff(2 * n + 2 - i - j, 0), -1);
                }
            sum.add(std::move(term));
        }
    }
    return sum.value();
}

RatFunc xi_gl22_printed(long long k) {
    RatioSum sum;
    const QuadExponent shared{0, -4, -2};  // -2 alpha (alpha + 2)

    RatioSum::Term one(1, qpow(shared.scaled(Rat(k))));
    one.mul_extra(cosh_pair(Monomial::p(8 * k)));
    one.mul_bracket(aff(1, 1), 1);
    one.mul_bracket(aff(-1, 1), 1);
    one.mul_bracket(aff(0, 1), 2);
    one.mul_bracket(aff(0, 2), -2);
    one.mul_bracket(aff(1, 2), -1);
    one.mul_bracket(aff(-1, 2), -1);
    sum.add(std::move(one));

    RatioSum::Term two((k % 2) == 0 ? Int(-1) : Int(1), qpow(shared.scaled(Rat(k))));
    two.mul_extra(cosh_pair(Monomial::p(4 * k)));
    two.mul_bracket(aff(2, 0), 2);
    two.mul_bracket(aff(0, 1), 2);
    two.mul_bracket(aff(1, 1), 1);
    two.mul_bracket(aff(-1, 1), 1);
    two.mul_bracket(aff(1, 0), -2);
    two.mul_bracket(aff(0, 2), -2);
    two.mul_bracket(aff(2, 2), -1);
    two.mul_bracket(aff(-2, 2), -1);
    sum.add(std::move(two));

    // Third line exactly as typeset: q^{-2k(alpha^2+alpha+1)} prefactor and a
    // (q^alpha + q^{-alpha})^2 numerator.
    RatioSum::Term three(1, qpow(QuadExponent{-2, -2, -2}.scaled(Rat(k))));
    three.mul_extra(cosh_pair(Monomial::p(4 * k)));
    three.mul_bracket(aff(3, 0), 1);
    three.mul_bracket(aff(0, 2), 2);
    three.mul_bracket(aff(1, 1), 1);
    three.mul_bracket(aff(-1, 1), 1);
    three.mul_bracket(aff(1, 0), -1);
    three.mul_bracket(aff(0, 1), -2);
    three.mul_bracket(aff(-1, 2), -1);
    three.mul_bracket(aff(1, 2), -1);
    three.mul_bracket(aff(-2, 2), -1);
    three.mul_bracket(aff(2, 2), -1);
    sum.add(std::move(three));

    return sum.value();
}

std::string ratfunc_fingerprint(const RatFunc& x) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(fnv1a64(x.to_string())));
    return buf;
}

std::vector<OracleCase> builtin_oracle_cases() {
    std::vector<OracleCase> cases;
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        OracleCase c;
        c.name = "gl(" + std::to_string(m) + "," + std::to_string(n) + ")";
        c.table = gl_family_table(m, n);
        c.oracle = [m = m, n = n](long long k) { return xi_explicit_glmn(m, n, k); };
        cases.push_back(std::move(c));
    }
    for (int n : {1, 2, 3}) {
        OracleCase c;
        c.name = "osp(" + std::to_string(n) + ")";
        c.table = osp_family_table(n);
        c.oracle = [n = n](long long k) { return xi_explicit_osp(n, k); };
        cases.push_back(std::move(c));
    }
    OracleCase adj;
    adj.name = "gl(2,1)-adjoint";
    adj.table = gl21_adjoint_table();
    adj.oracle = [](long long k) { return xi_explicit_gl21_adjoint(k); };
    cases.push_back(std::move(adj));
    return cases;
}

bool CrossCheckReport::all_pass() const {
    for (const CrossCheckEntry& e : entries)
        if (!e.pass) return false;
    return true;
}

CrossCheckReport cross_check(const OracleCase& c) {
    CrossCheckReport report;
    XiSeries xs(c.table);
    for (long long k = c.k_min; k <= c.k_max; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const RatFunc engine = xs.at(k);
        const RatFunc oracle = c.oracle(k);
        const bool pass = engine == oracle;
        const auto stop = std::chrono::steady_clock::now();
        CrossCheckEntry e;
        e.case_name = c.name;
        e.k = k;
        e.pass = pass;
        e.engine_hash = ratfunc_fingerprint(engine);
        e.oracle_hash = ratfunc_fingerprint(oracle);
        e.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string cross_check_to_json(const CrossCheckReport& r) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const CrossCheckEntry& e : r.entries) {
        nlohmann::ordered_json row;
        row["case"] = e.case_name;
        row["k"] = e.k;
        row["pass"] = e.pass;
        row["engine_hash"] = e.engine_hash;
        row["oracle_hash"] = e.oracle_hash;
        row["millis"] = e.millis;
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

std::vector<ThreeWayEntry> gl22_three_way(long long k_min, long long k_max) {
    std::vector<ThreeWayEntry> entries;
    XiSeries xs(gl_family_table(2, 2));
    for (long long k = k_min; k <= k_max; ++k) {
        const RatFunc engine = xs.at(k);
        const RatFunc oracle = xi_explicit_glmn(2, 2, k);
        const RatFunc printed = xi_gl22_printed(k);
        entries.push_back({k, engine == oracle, engine == printed, oracle == printed});
    }
    return entries;
}

std::string three_way_to_json(const std::vector<ThreeWayEntry>& entries) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const ThreeWayEntry& e : entries) {
        nlohmann::ordered_json row;
        row["k"] = e.k;
        row["engine_eq_oracle"] = e.engine_eq_oracle;
        row["engine_eq_printed"] = e.engine_eq_printed;
        row["oracle_eq_printed"] = e.oracle_eq_printed;
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

}  // namespace qlink
