#pragma once

#include "qlink/superalg.hpp"

#include <string>
#include <vector>

namespace qlink {

// Partition fitting the m x n box of the owning gl(m|n): at most m rows,
// each at most n.
struct YoungDiagram {
    std::vector<int> rows;  // weakly decreasing, positive

    int boxes() const;
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    std::string to_string() const;  // "[2,1]", "[]" for the empty diagram
};

// All diagrams fitting the m x n box, graded by box count and ordered by
// descending lexicographic rows within a grade: [], [1], [2], [1,1], ...
std::vector<YoungDiagram> enumerate_allowable(int m, int n);

// Highest weight attached to an allowable diagram: eps part
// (0,...,0,-lam_t,...,-lam_1), delta part the conjugate partition.
// Throws NotAllowable when d does not fit the m x n box.
Weight diagram_weight(int m, int n, const YoungDiagram& d);

enum class TableFamily { GlVector, OspVector, Gl21Adjoint, UserSupplied };
std::string to_string(TableFamily f);

struct DecompTerm {
    Weight nu;
    int m_plus = 0, m_minus = 0;  // multiplicities in the symmetric/antisymmetric parts
    int parity = 0;               // weight degree mod 2

    friend bool operator==(const DecompTerm&, const DecompTerm&) = default;
};

// Decomposition of V(lam_alpha) (x) V(lam_alpha) into typical irreducibles.
struct DecompTable {
    RootSystem rs;
    Weight lam_alpha;
    TableFamily family = TableFamily::UserSupplied;
    std::vector<DecompTerm> terms;
};

bool operator==(const DecompTable& a, const DecompTable& b);

// One term per allowable diagram: nu = diagram weight + 2 alpha delta,
// multiplicity 1, side and parity from the box-count parity.
DecompTable gl_family_table(int m, int n);

// Terms (c,d) with 0 <= c <= n, 0 <= d <= n-c in double-sum order:
// nu = (2 alpha - c - 2d) eps_0 + eps_1 + ... + eps_c, level c + 2d.
DecompTable osp_family_table(int n);

// The six-term gl(2|1) table for the adjoint family (1,0|alpha-1); the
// mixed term (1,0|2 alpha - 1) sits once on each side.
DecompTable gl21_adjoint_table();

// Structural well-formedness: positive multiplicities, typicality of every
// nu under symbolic alpha, and the classical dimension balance
//   sum m_nu dim0(nu) = 2^{#odd roots} * dim0(lam_alpha)^2
// evaluated at a generic rational alpha. Throws InvariantViolation naming
// the first failing term.
void validate_table(const DecompTable& t);

std::string table_to_json(const DecompTable& t);
DecompTable table_from_json(const std::string& text);  // SchemaError / InvariantViolation

DecompTable load_table(const std::string& path);
void save_table(const DecompTable& t, const std::string& path);

}  // namespace qlink
