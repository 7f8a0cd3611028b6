#include "qlink/numeric.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

namespace qlink {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned digits10) : saved(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
};

// Exponent of a monomial at a fixed alpha0: (eq2 + ep2*alpha0 + ea2*alpha0^2)/2.
Rat monomial_exponent(const Monomial& m, const Rat& alpha0) {
    return (Rat(m.eq.twice) + Rat(m.ep.twice) * alpha0 + Rat(m.ea.twice) * alpha0 * alpha0) / 2;
}

Real eval_poly(const LaurentPoly& p, const Real& logq, const Rat& alpha0) {
    Real acc = 0;
    for (const auto& [m, c] : p.terms()) {
        const Rat e = monomial_exponent(m, alpha0);
        acc += Real(c) * exp(Real(e) * logq);
    }
    return acc;
}

double exponent_scale(const RatFunc& x, const Rat& alpha0, double log10q) {
    double worst = 0;
    auto scan = [&](const LaurentPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            const double e = monomial_exponent(m, alpha0).convert_to<double>();
            worst = std::max(worst, std::abs(e * log10q));
        }
    };
    scan(x.num());
    scan(x.den());
    return std::min(worst, 5e4);
}

}  // namespace

namespace {

// Stabilized value of x at (q0, alpha0): recompute at growing working
// precision until two rounds agree to `precision` digits.
Real eval_value(const RatFunc& x, const Rat& q0, const Rat& alpha0, unsigned precision) {
    if (q0 <= 0) throw ParseError("evaluation point q0 must be positive");
    if (x.is_zero()) return Real(0);

    const double log10q = std::abs(std::log10(std::abs(q0.convert_to<double>())));
    unsigned work = precision + 40 + static_cast<unsigned>(exponent_scale(x, alpha0, log10q));

    Real prev;
    bool have_prev = false;
    for (int round = 0; round < 8; ++round, work += work / 2 + 60) {
        PrecisionGuard guard(work);
        const Real logq = log(Real(q0));
        const Real den = eval_poly(x.den(), logq, alpha0);
        const Real tol = pow(Real(10), -static_cast<int>(precision));
        if (abs(den) < tol) throw PoleAtPoint("denominator vanishes at the evaluation point");
        const Real num = eval_poly(x.num(), logq, alpha0);
        const Real value = num / den;
        if (have_prev) {
            const Real agree = pow(Real(10), -static_cast<int>(precision) - 5);
            if (abs(value - prev) <= agree * std::max(Real(1), abs(value))) return value;
        }
        prev = value;
        have_prev = true;
    }
    throw PoleAtPoint("evaluation did not stabilize at the requested precision");
}

}  // namespace

std::string rf_eval(const RatFunc& x, const Rat& q0, const Rat& alpha0, unsigned precision) {
    if (precision == 0) precision = 1;
    const Real value = eval_value(x, q0, alpha0, precision);
    if (value == 0) return "0";
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(precision)) << value;
    return os.str();
}

bool rf_eval_close(const RatFunc& x, const RatFunc& y, const Rat& q0, const Rat& alpha0,
                   unsigned digits) {
    if (digits == 0) digits = 1;
    PrecisionGuard guard(digits + 60);
    const Real vx = eval_value(x, q0, alpha0, digits + 10);
    const Real vy = eval_value(y, q0, alpha0, digits + 10);
    const Real tol = pow(Real(10), -static_cast<int>(digits));
    return abs(vx - vy) <= tol * std::max(Real(1), abs(vy));
}

namespace {

// Coefficients of the expansion sum_m c_m e^{E_m h} = sum_j (sum_m c_m E_m^j) h^j / j!
// grouped by distinct exponent E at the given alpha0. Duplicate exponents are
// merged so that a vanishing group count certifies the identically-zero case.
struct MomentSeries {
    std::vector<Rat> exponents;
    std::vector<Rat> coeffs;  // running c_m * E_m^j, advanced by step()
    std::size_t groups = 0;

    explicit MomentSeries(const LaurentPoly& p, const Rat& alpha0) {
        std::map<Rat, Rat> grouped;
        for (const auto& [m, c] : p.terms()) grouped[monomial_exponent(m, alpha0)] += Rat(c);
        for (auto& [e, c] : grouped) {
            if (c == 0) continue;
            exponents.push_back(e);
            coeffs.push_back(c);
        }
        groups = exponents.size();
    }

    Rat moment() const {
        Rat s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    void step() {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= exponents[i];
    }
};

}  // namespace

Rat rf_limit_q1(const RatFunc& x, const Rat& alpha0) {
    if (x.is_zero()) return 0;
    MomentSeries num(x.num(), alpha0), den(x.den(), alpha0);
    if (den.groups == 0)
        throw LimitDiverges("denominator vanishes identically at alpha0 = " + alpha0.str());
    if (num.groups == 0) return 0;

    // First j with a nonzero denominator moment bounds the vanishing order;
    // j never exceeds the distinct-exponent count of the denominator.
    for (std::size_t j = 0; j < den.groups; ++j) {
        const Rat b = den.moment();
        const Rat a = num.moment();
        if (b != 0) return a / b;
        if (a != 0) throw LimitDiverges("pole of order >= 1 at q = 1 for alpha0 = " + alpha0.str());
        num.step();
        den.step();
    }
    throw LimitDiverges("denominator vanishes identically at alpha0 = " + alpha0.str());
}

}  // namespace qlink
