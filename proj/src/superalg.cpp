#include "qlink/superalg.hpp"

#include "qlink/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace qlink {

std::string AlgebraKind::to_string() const {
    if (tag == FamilyTag::GL)
        return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    return "osp(2|" + std::to_string(2 * n) + ")";
}

std::string AffineRat::to_string() const {
    if (b == 0) return rat_to_string(a);
    std::string al = (b == 1) ? "al" : (b == -1) ? "-al" : rat_to_string(b) + "*al";
    if (a == 0) return al;
    if (b > 0) return rat_to_string(a) + "+" + al;
    return rat_to_string(a) + al;  // negative coefficient carries its sign
}

Weight Weight::operator+(const Weight& o) const {
    if (kind != o.kind) throw KindMismatch("adding weights of different algebras");
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] = w.coords[i] + o.coords[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    if (kind != o.kind) throw KindMismatch("subtracting weights of different algebras");
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] = w.coords[i] - o.coords[i];
    return w;
}

Weight Weight::scaled(const Rat& s) const {
    Weight w = *this;
    for (auto& c : w.coords) c = c.scaled(s);
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const AffineRat& c) { return c.is_zero(); });
}

std::string Weight::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += (i == static_cast<std::size_t>(kind.m)) ? "|" : ",";
        out += coords[i].to_string();
    }
    return out + ")";
}

Weight zero_weight(const AlgebraKind& kind) {
    return Weight{kind, std::vector<AffineRat>(kind.basis_size())};
}

Weight family_highest(const AlgebraKind& kind) {
    Weight w = zero_weight(kind);
    if (kind.tag == FamilyTag::GL) {
        for (int j = 0; j < kind.n; ++j) w.coords[kind.m + j].b = 1;
    } else {
        w.coords[0].b = 1;
    }
    return w;
}

namespace {

Weight basis(const AlgebraKind& kind, int slot, int value = 1) {
    Weight w = zero_weight(kind);
    w.coords[slot].a = value;
    return w;
}

}  // namespace

RootSystem make_algebra(const AlgebraKind& kind) {
    if (kind.m < 1 || kind.n < 1) throw InvalidRank("ranks must satisfy m, n >= 1");
    RootSystem rs;
    rs.kind = kind;
    const int m = kind.m, n = kind.n;
    rs.rho = zero_weight(kind);

    if (kind.tag == FamilyTag::GL) {
        rs.metric.assign(m, 1);
        rs.metric.insert(rs.metric.end(), n, -1);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) rs.even_pos.push_back(basis(kind, i) - basis(kind, j));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                rs.even_pos.push_back(basis(kind, m + i) - basis(kind, m + j));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) rs.odd_pos.push_back(basis(kind, i) - basis(kind, m + j));
        // 2 rho = sum (m-n-2i+1) eps_i + sum (m+n-2j+1) delta_j
        for (int i = 1; i <= m; ++i) rs.rho.coords[i - 1].a = Rat(m - n - 2 * i + 1, 2);
        for (int j = 1; j <= n; ++j) rs.rho.coords[m + j - 1].a = Rat(m + n - 2 * j + 1, 2);
    } else {
        rs.metric.assign(1, -1);
        rs.metric.insert(rs.metric.end(), n, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) rs.even_pos.push_back(basis(kind, i) - basis(kind, j));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) rs.even_pos.push_back(basis(kind, i) + basis(kind, j));
        for (int i = 1; i <= n; ++i) rs.even_pos.push_back(basis(kind, i, 2));
        for (int i = 1; i <= n; ++i) {
            rs.odd_pos.push_back(basis(kind, 0) - basis(kind, i));
            rs.odd_pos.push_back(basis(kind, 0) + basis(kind, i));
        }
        // rho = -n eps_0 + sum (n-i+1) eps_i
        rs.rho.coords[0].a = -n;
        for (int i = 1; i <= n; ++i) rs.rho.coords[i].a = n - i + 1;
    }
    return rs;
}

QuadExponent bilinear(const RootSystem& rs, const Weight& x, const Weight& y) {
    if (x.kind != rs.kind || y.kind != rs.kind)
        throw KindMismatch("bilinear form needs weights of the same algebra");
    QuadExponent out;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        const AffineRat &u = x.coords[i], &v = y.coords[i];
        const Rat g = rs.metric[i];
        out.a += g * u.a * v.a;
        out.b += g * (u.a * v.b + u.b * v.a);
        out.c += g * u.b * v.b;
    }
    return out;
}

QuadExponent casimir(const RootSystem& rs, const Weight& lam) {
    return bilinear(rs, lam, lam + rs.rho.scaled(2));
}

int atypicality_index(const RootSystem& rs, const Weight& lam) {
    const Weight shifted = lam + rs.rho;
    int count = 0;
    for (const Weight& beta : rs.odd_pos)
        if (bilinear(rs, shifted, beta).is_zero()) ++count;
    return count;
}

std::string to_string(Unitarity u) {
    switch (u) {
        case Unitarity::Type1: return "type1";
        case Unitarity::Type2: return "type2";
        default: return "non-unitary";
    }
}

namespace {

Weight at_alpha(const Weight& w, const Rat& alpha0) {
    Weight out = w;
    for (auto& c : out.coords) c = AffineRat{c.at(alpha0), 0};
    return out;
}

}  // namespace

Unitarity unitarity_class(const RootSystem& rs, const Weight& lam, const Rat& alpha0) {
    const AlgebraKind kind = rs.kind;
    const int m = kind.m, n = kind.n;
    const Weight lamv = at_alpha(lam, alpha0);
    const Weight lr = lamv + rs.rho;
    auto pair = [&](const Weight& x, const Weight& root) { return bilinear(rs, x, root).a; };

    if (kind.tag == FamilyTag::GL) {
        const auto eps = [&](int i) { return basis(kind, i - 1); };
        const auto del = [&](int j) { return basis(kind, m + j - 1); };
        bool type1 = pair(lr, eps(m) - del(n)) > 0;
        for (int w = 1; !type1 && w <= n; ++w)
            type1 = pair(lr, eps(m) - del(w)) == 0 && pair(lamv, del(w) - del(n)) == 0;
        if (type1) return Unitarity::Type1;
        bool type2 = pair(lr, eps(1) - del(1)) < 0;
        for (int k = 1; !type2 && k <= m; ++k)
            type2 = pair(lr, eps(k) - del(1)) == 0 && pair(lamv, eps(1) - eps(k)) == 0;
        if (type2) return Unitarity::Type2;
        return Unitarity::NonUnitary;
    }

    const auto eps = [&](int i) { return basis(kind, i); };  // eps(0) is eps_0
    if (pair(lamv, eps(0) - eps(1)) >= 0) return Unitarity::Type1;
    bool type2 = pair(lr, eps(0) + eps(1)) < 0 || lamv.is_zero();
    for (int k = 1; !type2 && k <= n; ++k)
        type2 = pair(lr, eps(0) + eps(k)) == 0 && pair(lamv, eps(1) - eps(k)) == 0;
    return type2 ? Unitarity::Type2 : Unitarity::NonUnitary;
}

namespace {

RatFunc bracket_of(const QuadExponent& e) {
    if (e.c != 0)
        throw NonRepresentableBracketArgument("bracket argument has an alpha^2 part: " +
                                              e.to_string());
    return qnum_ext(e.a, e.b);
}

}  // namespace

RatFunc q_dimension(const RootSystem& rs, const Weight& lam) {
    const Weight shifted = lam + rs.rho;
    RatFunc out = RatFunc::one();
    for (const Weight& beta : rs.even_pos)
        out = out * bracket_of(bilinear(rs, shifted, beta)) /
              bracket_of(bilinear(rs, rs.rho, beta));
    return out;
}

RatFunc gamma0_eigenvalue(const RootSystem& rs, const Weight& lam) {
    const Weight shifted = lam + rs.rho;
    RatFunc out = RatFunc::one();
    for (const Weight& beta : rs.odd_pos) {
        const QuadExponent x = bilinear(rs, shifted, beta);
        const QuadExponent r = bilinear(rs, rs.rho, beta);
        if (x == r) continue;  // lam contributes nothing on this root
        if (r.is_zero())
            out = out * bracket_of(x);
        else
            out = out * bracket_of(x) / bracket_of(r);
    }
    return out;
}

Int classical_dim0(const RootSystem& rs, const Weight& lam, const Rat& alpha0) {
    Rat v;
    try {
        v = rf_limit_q1(q_dimension(rs, lam), alpha0);
    } catch (const LimitDiverges&) {
        throw NonIntegralDimension("q-dimension of " + lam.to_string() +
                                   " has no finite q -> 1 limit at alpha0 = " +
                                   rat_to_string(alpha0));
    }
    if (boost::multiprecision::denominator(v) != 1 || v <= 0)
        throw NonIntegralDimension("q -> 1 limit of the q-dimension of " + lam.to_string() +
                                   " is " + rat_to_string(v) + ", not a positive integer");
    return boost::multiprecision::numerator(v);
}

namespace {

Rat alpha_coefficient(const std::string& prefix, const std::string& entry) {
    if (prefix.empty() || prefix == "+") return 1;
    if (prefix == "-") return -1;
    if (prefix.back() != '*') throw ParseError("expected '*al' in '" + entry + "'");
    return rat_from_string(prefix.substr(0, prefix.size() - 1));
}

AffineRat parse_affine(const std::string& s) {
    if (s.empty()) throw ParseError("empty weight entry");
    const std::size_t pos = s.find("al");
    if (pos == std::string::npos) return {rat_from_string(s), 0};
    if (pos + 2 != s.size()) {
        // alpha term first: s*al+r or s*al-r
        const std::string tail = s.substr(pos + 2);
        if (tail[0] != '+' && tail[0] != '-')
            throw ParseError("expected '+r' or '-r' after the alpha term in '" + s + "'");
        const Rat a = rat_from_string(tail[0] == '+' ? tail.substr(1) : tail);
        return {a, alpha_coefficient(s.substr(0, pos), s)};
    }
    const std::string prefix = s.substr(0, pos);
    if (prefix.empty()) return {0, 1};
    if (prefix == "-") return {0, -1};
    if (prefix == "+") return {0, 1};
    const char tail = prefix.back();
    if (tail == '+' || tail == '-') {
        const Rat sign = (tail == '-') ? -1 : 1;
        return {rat_from_string(prefix.substr(0, prefix.size() - 1)), sign};
    }
    if (tail != '*') throw ParseError("expected '*al' in '" + s + "'");
    const std::string core = prefix.substr(0, prefix.size() - 1);
    for (std::size_t i = core.size(); i-- > 1;) {
        if ((core[i] == '+' || core[i] == '-') && std::isdigit(static_cast<unsigned char>(core[i - 1]))) {
            Rat coeff = rat_from_string(core.substr(i + 1));
            if (core[i] == '-') coeff = -coeff;
            return {rat_from_string(core.substr(0, i)), coeff};
        }
    }
    return {0, rat_from_string(core)};
}

}  // namespace

Weight parse_weight(const AlgebraKind& kind, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("weight literal must be parenthesized: '" + text + "'");
    s = s.substr(1, s.size() - 2);
    const std::size_t bar = s.find('|');
    if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
        throw ParseError("weight literal needs exactly one '|': '" + text + "'");
    auto split = [](const std::string& part) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            const std::size_t c = part.find(',', start);
            if (c == std::string::npos) {
                out.push_back(part.substr(start));
                return out;
            }
            out.push_back(part.substr(start, c - start));
            start = c + 1;
        }
    };
    const auto left = split(s.substr(0, bar)), right = split(s.substr(bar + 1));
    if (static_cast<int>(left.size()) != kind.m || static_cast<int>(right.size()) != kind.n)
        throw ParseError("weight literal for " + kind.to_string() + " needs " +
                         std::to_string(kind.m) + "|" + std::to_string(kind.n) + " entries: '" +
                         text + "'");
    Weight w = zero_weight(kind);
    for (int i = 0; i < kind.m; ++i) w.coords[i] = parse_affine(left[i]);
    for (int j = 0; j < kind.n; ++j) w.coords[kind.m + j] = parse_affine(right[j]);
    return w;
}

}  // namespace qlink
