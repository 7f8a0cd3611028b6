#include "qlink/cli.hpp"

#include "qlink/decomp.hpp"
#include "qlink/engine.hpp"
#include "qlink/errors.hpp"
#include "qlink/numeric.hpp"
#include "qlink/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qlink {

namespace {

AlgebraKind parse_algebra(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string ranks = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto rank = [&](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || value < 1)
            throw ParseError("bad rank '" + s + "' in --algebra " + text);
        return value;
    };
    if (head == "gl") {
        const auto comma = ranks.find(',');
        if (comma == std::string::npos)
            throw ParseError("--algebra gl takes two ranks, e.g. gl:2,2");
        return AlgebraKind::gl(rank(ranks.substr(0, comma)),
                               rank(ranks.substr(comma + 1)));
    }
    if (head == "osp") {
        if (ranks.empty()) throw ParseError("--algebra osp takes one rank, e.g. osp:2");
        return AlgebraKind::osp(rank(ranks));
    }
    throw ParseError("unknown algebra '" + text + "' (gl:m,n or osp:n)");
}

DecompTable resolve_table(const std::string& algebra, const std::string& family,
                          const std::string& table_file) {
    if (!table_file.empty()) {
        DecompTable t = load_table(table_file);
        validate_table(t);
        return t;
    }
    if (algebra.empty())
        throw ParseError("either --algebra or --table is required");
    const AlgebraKind kind = parse_algebra(algebra);
    if (family == "vector")
        return kind.tag == FamilyTag::GL ? gl_family_table(kind.m, kind.n)
                                         : osp_family_table(kind.n);
    if (family == "adjoint") {
        if (kind == AlgebraKind::gl(2, 1)) return gl21_adjoint_table();
        throw ParseError("the adjoint family is built in only for gl:2,1");
    }
    throw ParseError("unknown family '" + family + "' (vector|adjoint)");
}

std::vector<long long> parse_exponents(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string piece = text.substr(pos, comma - pos);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != piece.size() || piece.empty())
            throw ParseError("bad exponent '" + piece + "' in --exponents " + text);
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw SchemaError("cannot write output file '" + out_path + "'");
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_ratfunc(const RatFunc& x, const std::string& format) {
    if (format == "json") return ratfunc_to_json(x) + "\n";
    if (format == "text") return x.to_string() + "\n";
    throw ParseError("unknown format '" + format + "' (text|json)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact two-variable link invariants from quantum superalgebras"};
    app.require_subcommand(1);

    std::string algebra, family = "vector", table_file, out_path, format = "text";
    std::string suite = "all", expr_file, q_text, alpha_text, exponents_text;
    long long k = 0;
    int digits = 30;

    CLI::App* table_cmd = app.add_subcommand("table", "emit a decomposition table");
    table_cmd->add_option("--algebra", algebra, "gl:m,n or osp:n")->required();
    table_cmd->add_option("--family", family, "vector|adjoint");
    table_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* xi_cmd = app.add_subcommand("xi", "compute one xi_k");
    xi_cmd->add_option("--algebra", algebra, "gl:m,n or osp:n");
    xi_cmd->add_option("--family", family, "vector|adjoint");
    xi_cmd->add_option("--table", table_file, "decomposition table JSON file");
    xi_cmd->add_option("-k,--power", k, "braiding power")->required();
    xi_cmd->add_option("--format", format, "text|json");
    xi_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* link_cmd = app.add_subcommand("link", "evaluate a braid-closure link");
    link_cmd->add_option("--algebra", algebra, "gl:m,n or osp:n");
    link_cmd->add_option("--family", family, "vector|adjoint");
    link_cmd->add_option("--table", table_file, "decomposition table JSON file");
    link_cmd->add_option("--exponents", exponents_text, "comma-separated powers")
        ->required();
    link_cmd->add_option("--format", format, "text|json");
    link_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suites");
    check_cmd->add_option("--suite", suite, "markov|recurrence|oracle|dimension|all");
    check_cmd->add_option("--format", format, "text|json");
    check_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a serialized value");
    eval_cmd->add_option("--expr-file", expr_file, "rational-function JSON file")
        ->required();
    eval_cmd->add_option("--q", q_text, "rational q value, e.g. 3/2")->required();
    eval_cmd->add_option("--alpha", alpha_text, "rational alpha value")->required();
    eval_cmd->add_option("--digits", digits, "significant digits");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (table_cmd->parsed()) {
            emit(table_to_json(resolve_table(algebra, family, "")), out_path, out);
        } else if (xi_cmd->parsed()) {
            XiSeries xs(resolve_table(algebra, family, table_file));
            emit(render_ratfunc(xs.at(k), format), out_path, out);
        } else if (link_cmd->parsed()) {
            const DecompTable t = resolve_table(algebra, family, table_file);
            const BraidSpec braid =
                BraidSpec::from_exponents(parse_exponents(exponents_text));
            emit(render_ratfunc(link_polynomial(t, braid), format), out_path, out);
        } else if (check_cmd->parsed()) {
            const std::vector<SuiteEntry> entries = run_suites(suite);
            if (format == "json")
                emit(suites_json_report(entries), out_path, out);
            else if (format == "text")
                emit(suites_text_report(entries), out_path, out);
            else
                throw ParseError("unknown format '" + format + "' (text|json)");
            if (!all_pass(entries)) return 1;
        } else if (eval_cmd->parsed()) {
            const RatFunc x = ratfunc_from_json(read_file(expr_file));
            if (digits < 1) throw ParseError("--digits must be positive");
            emit(rf_eval(x, rat_from_string(q_text), rat_from_string(alpha_text),
                         static_cast<unsigned>(digits)) +
                     "\n",
                 out_path, out);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qlink
