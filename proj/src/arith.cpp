#include "qlink/arith.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <sstream>

namespace qlink {

using json = nlohmann::ordered_json;

std::string HalfExponent::to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string Monomial::to_string() const {
    if (is_identity()) return "1";
    std::string out;
    auto emit = [&](const char* var, HalfExponent e) {
        if (e.is_zero()) return;
        if (!out.empty()) out += "*";
        out += var;
        if (e.twice != 2) out += "^{" + e.to_string() + "}";
    };
    emit("q", eq);
    emit("p", ep);
    emit("A", ea);
    return out;
}

LaurentPoly LaurentPoly::from_int(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_monomial(const Monomial& m, Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_identity() && terms_.begin()->second == 1;
}

std::pair<Monomial, Int> LaurentPoly::leading() const {
    if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::pair<Monomial, Int> LaurentPoly::trailing() const {
    if (terms_.empty()) throw InvariantViolation("trailing term of the zero polynomial");
    auto it = terms_.begin();
    return {it->first, it->second};
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    r.negate();
    return r;
}

void LaurentPoly::negate() {
    for (auto& [m, c] : terms_) c = -c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    const LaurentPoly& small = size() <= o.size() ? *this : o;
    const LaurentPoly& large = size() <= o.size() ? o : *this;
    LaurentPoly r;
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [ml, cl] : large.terms_) r.add_term(ms * ml, cs * cl);
    return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    // A common monomial shift preserves the term order, so rebuild with a hint.
    auto hint = r.terms_.end();
    for (const auto& [mm, cc] : terms_) hint = r.terms_.emplace_hint(hint, mm * m, cc * c);
    return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
    LaurentPoly base = *this, acc = LaurentPoly::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void LaurentPoly::divide_exact(const Int& g) {
    if (g == 1) return;
    for (auto& [m, c] : terms_) c /= g;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        Int mag = neg ? Int(-it->second) : it->second;
        std::string body;
        if (it->first.is_identity()) {
            body = mag.str();
        } else {
            if (mag != 1) body = mag.str() + "*";
            body += it->first.to_string();
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    const Monomial t = den_.trailing().first;
    if (!t.is_identity()) {
        const Monomial shift = t.inverse();
        num_ = num_.mul_monomial(shift);
        den_ = den_.mul_monomial(shift);
    }
    const Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_.divide_exact(g);
        den_.divide_exact(g);
    }
    if (den_.leading().second < 0) {
        num_.negate();
        den_.negate();
    }
    // Exact monomial ratios collapse to m/1 (a structural check, not a gcd).
    if (!den_.is_one() && num_.size() == den_.size()) {
        const auto [nm, nc] = num_.leading();
        const auto [dm, dc] = den_.leading();
        if (nc % dc == 0) {
            const Int c = nc / dc;
            const Monomial m = nm * dm.inverse();
            if (den_.mul_monomial(m, c) == num_) {
                num_ = LaurentPoly::from_monomial(m, c);
                den_ = LaurentPoly::one();
            }
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_.negate();
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool operator==(const RatFunc& x, const RatFunc& y) {
    if (x.num_ == y.num_ && x.den_ == y.den_) return true;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e == 0) return RatFunc::one();
    if (e < 0) return RatFunc::one() / pow(-e);
    return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string AffineInt::to_string() const {
    if (b == 0) return std::to_string(a);
    std::string s = (b == 1) ? "al" : (b == -1) ? "-al" : std::to_string(b) + "*al";
    if (a == 0) return s;
    if (b > 0)
        return std::to_string(a) + "+" + s;
    return std::to_string(a) + s;  // negative b carries its own sign
}

std::string QuadExponent::to_string() const {
    std::ostringstream os;
    os << a.str() << " + (" << b.str() << ")*al + (" << c.str() << ")*al^2";
    return os.str();
}

namespace {

std::int64_t twice_to_lattice(const Rat& r, const char* what) {
    const Rat t = r * 2;
    if (boost::multiprecision::denominator(t) != 1)
        throw NonHalfIntegerExponent(std::string(what) + " = " + r.str() + " is not a half-integer");
    const Int n = boost::multiprecision::numerator(t);
    if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max())
        throw NonHalfIntegerExponent(std::string(what) + " out of range");
    return static_cast<std::int64_t>(n);
}

}  // namespace

Monomial qpow(const QuadExponent& e) {
    return Monomial{{twice_to_lattice(e.a, "q exponent")},
                    {twice_to_lattice(e.b, "p exponent")},
                    {twice_to_lattice(e.c, "A exponent")}};
}

LaurentPoly bracket_num(AffineInt x) {
    LaurentPoly p;
    p.add_term(Monomial{{2 * x.a}, {2 * x.b}, {0}}, 1);
    p.add_term(Monomial{{-2 * x.a}, {-2 * x.b}, {0}}, -1);
    return p;
}

RatFunc qnum(AffineInt x) {
    return RatFunc(bracket_num(x), bracket_num(AffineInt{1, 0}));
}

RatFunc qnum_ext(const Rat& a, const Rat& b) {
    if (boost::multiprecision::denominator(Rat(a * 2)) != 1 ||
        boost::multiprecision::denominator(b) != 1)
        throw NonRepresentableBracketArgument("bracket argument " + a.str() + " + (" + b.str() +
                                              ")*al needs a half-integer constant part and an "
                                              "integer alpha part");
    const std::int64_t a2 = twice_to_lattice(a, "bracket constant part");
    const std::int64_t b2 = twice_to_lattice(b, "bracket alpha part");
    LaurentPoly num;
    num.add_term(Monomial{{a2}, {b2}, {0}}, 1);
    num.add_term(Monomial{{-a2}, {-b2}, {0}}, -1);
    return RatFunc(num, bracket_num(AffineInt{1, 0}));
}

std::string rat_to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(const std::string& s) {
    try {
        if (s.empty()) throw std::runtime_error("empty");
        Rat r(s);
        if (boost::multiprecision::denominator(r) == 0)
            throw std::runtime_error("zero denominator");
        return r;
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + s + "'");
    }
}

namespace {

json poly_to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json term;
        term["eq2"] = it->first.eq.twice;
        term["ep2"] = it->first.ep.twice;
        term["ea2"] = it->first.ea.twice;
        term["coeff"] = it->second.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

LaurentPoly poly_from_json(const json& arr) {
    if (!arr.is_array()) throw SchemaError("polynomial must be a list of term records");
    LaurentPoly p;
    for (const auto& term : arr) {
        if (!term.is_object() || !term.contains("eq2") || !term.contains("ep2") ||
            !term.contains("ea2") || !term.contains("coeff"))
            throw SchemaError("term record needs eq2, ep2, ea2, coeff");
        for (const char* k : {"eq2", "ep2", "ea2"})
            if (!term.at(k).is_number_integer())
                throw SchemaError(std::string("term field ") + k + " must be an integer");
        if (!term.at("coeff").is_string())
            throw SchemaError("term coeff must be a decimal string");
        Int c;
        try {
            c = Int(term.at("coeff").get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError("bad coefficient '" + term.at("coeff").get<std::string>() + "'");
        }
        p.add_term(Monomial{{term.at("eq2").get<std::int64_t>()},
                            {term.at("ep2").get<std::int64_t>()},
                            {term.at("ea2").get<std::int64_t>()}},
                   c);
    }
    return p;
}

}  // namespace

std::string ratfunc_to_json(const RatFunc& x) {
    json j;
    j["num"] = poly_to_json(x.num());
    j["den"] = poly_to_json(x.den());
    return j.dump(2);
}

RatFunc ratfunc_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) return RatFunc(poly_from_json(j), LaurentPoly::one());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw SchemaError("expected {num, den} or a bare term list");
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace qlink
