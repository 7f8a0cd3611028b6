#pragma once

#include "qlink/decomp.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qlink {

// Closed-form xi builders, assembled directly from the published product
// expressions rather than from decomposition tables, so that they can serve
// as independent cross-checks of the table-driven computation.

// gl(m|n) vector family, m >= n >= 1. The row-local product over l is
// validated on first use against the frozen gl(2|2) chi values; an
// interpretation clash raises IndexNestingUnresolved.
RatFunc xi_explicit_glmn(int m, int n, long long k);

// gl(m|1) specialization, m >= 1: the (m+1)-term single sum with Gaussian
// binomial even dimensions.
RatFunc xi_explicit_glm1(int m, long long k);

// gl(2|1) adjoint family: the six-term expression. The (2,0|2alpha-2) term
// carries the exponent -k*alpha*(alpha-2) required by the Markov identity.
RatFunc xi_explicit_gl21_adjoint(long long k);

// osp(2|2n) vector family, n >= 1: the (c,d) double sum with the
// delta_{i<=c} shifts oriented so the Markov identity holds, and with the
// cross terms i <= c < j included in the even dimension factor.
RatFunc xi_explicit_osp(int n, long long k);

// Verbatim transcription of the printed gl(2|2) three-line closed form,
// including its third line exactly as typeset.
RatFunc xi_gl22_printed(long long k);

// Canonical-text fingerprint (FNV-1a 64, hex) used in cross-check reports.
std::string ratfunc_fingerprint(const RatFunc& x);

// Pairing of one engine table with one closed-form builder over a k range.
struct OracleCase {
    std::string name;
    DecompTable table;
    long long k_min = -3, k_max = 3;
    std::function<RatFunc(long long)> oracle;
};

std::vector<OracleCase> builtin_oracle_cases();

struct CrossCheckEntry {
    std::string case_name;
    long long k = 0;
    bool pass = false;
    std::string engine_hash, oracle_hash;
    long long millis = 0;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;
    bool all_pass() const;
};

CrossCheckReport cross_check(const OracleCase& c);
std::string cross_check_to_json(const CrossCheckReport& r);

// Three-way comparison of the table engine, the product oracle, and the
// printed gl(2|2) closed form.
struct ThreeWayEntry {
    long long k = 0;
    bool engine_eq_oracle = false;
    bool engine_eq_printed = false;
    bool oracle_eq_printed = false;
};

std::vector<ThreeWayEntry> gl22_three_way(long long k_min, long long k_max);
std::string three_way_to_json(const std::vector<ThreeWayEntry>& entries);

}  // namespace qlink
