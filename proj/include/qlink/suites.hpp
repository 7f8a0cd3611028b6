#pragma once

#include "qlink/decomp.hpp"

#include <string>
#include <vector>

namespace qlink {

// Built-in decomposition tables: gl vector families for 1 <= m, n <= 3,
// osp vector families for 1 <= n <= 3, and the gl(2|1) adjoint family.
struct NamedTable {
    std::string name;
    DecompTable table;
};
std::vector<NamedTable> builtin_tables();

// Invariant suites runnable from the command line and the acceptance tests:
//   markov      xi_0 = 0 and xi_{+-1} = q^{+-C} on every built-in table
//   recurrence  annihilator identity for the exponential xi sequence
//   oracle      table engine vs closed-form products, plus the printed
//               gl(2|2) three-way comparison
//   dimension   box dimension sums and table balance checks
enum class SuiteId { Markov, Recurrence, Oracle, Dimension };

std::string to_string(SuiteId id);

struct SuiteEntry {
    std::string suite;
    std::string case_name;
    bool pass = false;
    std::string detail;
    long long millis = 0;
};

// Entries come back sorted by case name within the suite.
std::vector<SuiteEntry> run_suite(SuiteId id);

// selector: markov | recurrence | oracle | dimension | all. Throws
// ParseError on anything else.
std::vector<SuiteEntry> run_suites(const std::string& selector);

bool all_pass(const std::vector<SuiteEntry>& entries);

// Text report omits wall times so identical runs are byte-identical; the
// JSON report carries per-entry millis.
std::string suites_text_report(const std::vector<SuiteEntry>& entries);
std::string suites_json_report(const std::vector<SuiteEntry>& entries);

}  // namespace qlink
