#include "qlink/decomp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qlink {

using json = nlohmann::ordered_json;

int YoungDiagram::boxes() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string YoungDiagram::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rows[i]);
    }
    return out + "]";
}

std::vector<YoungDiagram> enumerate_allowable(int m, int n) {
    if (m < 1 || n < 1) throw InvalidRank("ranks must satisfy m, n >= 1");
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    auto extend = [&](auto&& self, int maxRow) -> void {
        out.push_back(YoungDiagram{rows});
        if (static_cast<int>(rows.size()) == m) return;
        for (int r = 1; r <= maxRow; ++r) {
            rows.push_back(r);
            self(self, r);
            rows.pop_back();
        }
    };
    extend(extend, n);
    std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
        if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
        return a.rows > b.rows;  // descending lexicographic within a grade
    });
    return out;
}

Weight diagram_weight(int m, int n, const YoungDiagram& d) {
    const int t = static_cast<int>(d.rows.size());
    if (t > m) throw NotAllowable("diagram " + d.to_string() + " has more than m rows");
    for (int i = 0; i < t; ++i) {
        if (d.rows[i] < 1 || d.rows[i] > n)
            throw NotAllowable("diagram " + d.to_string() + " has a row outside [1, n]");
        if (i && d.rows[i] > d.rows[i - 1])
            throw NotAllowable("diagram " + d.to_string() + " rows must not increase");
    }
    Weight w = zero_weight(AlgebraKind::gl(m, n));
    for (int j = 0; j < t; ++j) w.coords[m - t + j].a = -d.rows[t - 1 - j];
    for (int j = 1; j <= n; ++j) {
        int col = 0;
        while (col < t && d.rows[col] >= j) ++col;
        w.coords[m + j - 1].a = col;  // conjugate partition entry
    }
    return w;
}

std::string to_string(TableFamily f) {
    switch (f) {
        case TableFamily::GlVector: return "gl-vector";
        case TableFamily::OspVector: return "osp-vector";
        case TableFamily::Gl21Adjoint: return "gl21-adjoint";
        default: return "user";
    }
}

bool operator==(const DecompTable& a, const DecompTable& b) {
    return a.rs.kind == b.rs.kind && a.lam_alpha == b.lam_alpha && a.family == b.family &&
           a.terms == b.terms;
}

DecompTable gl_family_table(int m, int n) {
    DecompTable t;
    t.rs = make_algebra(AlgebraKind::gl(m, n));
    t.lam_alpha = family_highest(t.rs.kind);
    t.family = TableFamily::GlVector;
    const Weight shift = t.lam_alpha.scaled(2);
    for (const YoungDiagram& d : enumerate_allowable(m, n)) {
        const int parity = d.boxes() % 2;
        t.terms.push_back(DecompTerm{diagram_weight(m, n, d) + shift, parity == 0 ? 1 : 0,
                                     parity == 0 ? 0 : 1, parity});
    }
    return t;
}

DecompTable osp_family_table(int n) {
    DecompTable t;
    t.rs = make_algebra(AlgebraKind::osp(n));
    t.lam_alpha = family_highest(t.rs.kind);
    t.family = TableFamily::OspVector;
    for (int c = 0; c <= n; ++c)
        for (int d = 0; c + d <= n; ++d) {
            Weight nu = zero_weight(t.rs.kind);
            nu.coords[0] = AffineRat{Rat(-c - 2 * d), Rat(2)};
            for (int i = 1; i <= c; ++i) nu.coords[i].a = 1;
            const int parity = (c + 2 * d) % 2;
            t.terms.push_back(
                DecompTerm{nu, parity == 0 ? 1 : 0, parity == 0 ? 0 : 1, parity});
        }
    return t;
}

DecompTable gl21_adjoint_table() {
    DecompTable t;
    t.rs = make_algebra(AlgebraKind::gl(2, 1));
    t.family = TableFamily::Gl21Adjoint;
    t.lam_alpha = parse_weight(t.rs.kind, "(1,0|-1+al)");
    auto term = [&](const char* nu, int mp, int mm, int parity) {
        t.terms.push_back(DecompTerm{parse_weight(t.rs.kind, nu), mp, mm, parity});
    };
    term("(2,0|-2+2*al)", 1, 0, 0);
    term("(1,1|-2+2*al)", 0, 1, 0);
    term("(2,-1|-1+2*al)", 0, 1, 1);
    term("(1,0|-1+2*al)", 1, 1, 1);
    term("(1,-1|2*al)", 1, 0, 0);
    term("(0,0|2*al)", 0, 1, 0);
    return t;
}

void validate_table(const DecompTable& t) {
    if (t.terms.empty()) throw InvariantViolation("decomposition table has no terms");
    if (t.lam_alpha.kind != t.rs.kind)
        throw InvariantViolation("highest weight algebra differs from the table algebra");
    const Rat alpha0(1000);
    Int lhs = 0;
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        const DecompTerm& term = t.terms[i];
        const std::string where = "term " + std::to_string(i) + " (" + term.nu.to_string() + ")";
        if (term.m_plus < 0 || term.m_minus < 0 || term.m_plus + term.m_minus < 1)
            throw InvariantViolation(where + ": multiplicities must be nonnegative with sum >= 1");
        if (term.parity != 0 && term.parity != 1)
            throw InvariantViolation(where + ": parity must be 0 or 1");
        if (term.nu.kind != t.rs.kind)
            throw InvariantViolation(where + ": weight algebra differs from the table algebra");
        if (atypicality_index(t.rs, term.nu) != 0)
            throw InvariantViolation(where + ": weight is atypical under symbolic alpha");
        try {
            lhs += Int(term.m_plus + term.m_minus) * classical_dim0(t.rs, term.nu, alpha0);
        } catch (const Error& e) {
            throw InvariantViolation(where + ": " + e.what());
        }
    }
    Int rhs;
    try {
        const Int dim0 = classical_dim0(t.rs, t.lam_alpha, alpha0);
        rhs = (Int(1) << t.rs.odd_pos.size()) * dim0 * dim0;
    } catch (const Error& e) {
        throw InvariantViolation(std::string("highest weight: ") + e.what());
    }
    if (lhs != rhs)
        throw InvariantViolation("classical dimension balance fails: got " + lhs.str() +
                                 ", expected " + rhs.str());
}

namespace {

json table_json(const DecompTable& t) {
    json j;
    j["algebra"] = {{"kind", t.rs.kind.tag == FamilyTag::GL ? "gl" : "osp"},
                    {"m", t.rs.kind.m},
                    {"n", t.rs.kind.n}};
    j["family"] = to_string(t.family);
    j["highest_weight"] = t.lam_alpha.to_string();
    j["terms"] = json::array();
    for (const DecompTerm& term : t.terms)
        j["terms"].push_back({{"nu", term.nu.to_string()},
                              {"m_plus", term.m_plus},
                              {"m_minus", term.m_minus},
                              {"parity", term.parity}});
    return j;
}

TableFamily family_from_string(const std::string& s) {
    if (s == "gl-vector") return TableFamily::GlVector;
    if (s == "osp-vector") return TableFamily::OspVector;
    if (s == "gl21-adjoint") return TableFamily::Gl21Adjoint;
    if (s == "user") return TableFamily::UserSupplied;
    throw SchemaError("unknown table family '" + s + "'");
}

int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SchemaError(std::string("missing integer field '") + key + "'");
    const int v = j[key].get<int>();
    if (v < lo || v > hi)
        throw SchemaError(std::string("field '") + key + "' out of range");
    return v;
}

}  // namespace

std::string table_to_json(const DecompTable& t) { return table_json(t).dump(2) + "\n"; }

DecompTable table_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid table JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("algebra") || !j.contains("terms"))
            throw SchemaError("table JSON needs 'algebra' and 'terms'");
        const json& alg = j["algebra"];
        if (!alg.contains("kind") || !alg["kind"].is_string())
            throw SchemaError("algebra needs a 'kind' string");
        const std::string kindName = alg["kind"].get<std::string>();
        AlgebraKind kind{};
        if (kindName == "gl")
            kind = AlgebraKind::gl(require_int(alg, "m", 1, 16), require_int(alg, "n", 1, 16));
        else if (kindName == "osp")
            kind = AlgebraKind::osp(require_int(alg, "n", 1, 16));
        else
            throw SchemaError("algebra kind must be 'gl' or 'osp'");
        if (kindName == "osp" && alg.contains("m") && require_int(alg, "m", 1, 1) != 1)
            throw SchemaError("osp tables have m = 1");

        DecompTable t;
        t.rs = make_algebra(kind);
        t.family = j.contains("family") && j["family"].is_string()
                       ? family_from_string(j["family"].get<std::string>())
                       : TableFamily::UserSupplied;
        if (!j.contains("highest_weight") || !j["highest_weight"].is_string())
            throw SchemaError("table JSON needs a 'highest_weight' literal");
        t.lam_alpha = parse_weight(kind, j["highest_weight"].get<std::string>());
        if (!j["terms"].is_array()) throw SchemaError("'terms' must be an array");
        for (const json& term : j["terms"]) {
            if (!term.is_object() || !term.contains("nu") || !term["nu"].is_string())
                throw SchemaError("each term needs a 'nu' weight literal");
            t.terms.push_back(DecompTerm{parse_weight(kind, term["nu"].get<std::string>()),
                                         require_int(term, "m_plus", 0, 1 << 20),
                                         require_int(term, "m_minus", 0, 1 << 20),
                                         require_int(term, "parity", 0, 1)});
        }
        validate_table(t);
        return t;
    } catch (const ParseError& e) {
        throw SchemaError(e.what());
    }
}

DecompTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return table_from_json(buf.str());
}

void save_table(const DecompTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write table file '" + path + "'");
    out << table_to_json(t);
}

}  // namespace qlink
