#pragma once

#include "qlink/decomp.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace qlink {

// chi_nu(c) = (1 - q^{C(mu)+C(lam)-C(nu)})/(q - q^{-1}).
RatFunc chi_nu_c(const RootSystem& rs, const Weight& mu, const Weight& lam, const Weight& nu);

// Eigenvalue of the k-th braid-power invariant on V(lam_alpha) (x) V(lam_alpha):
//   xi_k = q^{-k C} sum_nu (-1)^{parity} q^{(k/2) C(nu)} (m+ + (-1)^k m-)
//          * (Gamma0 ratio) * (D0_q(nu)/D0_q(lam_alpha)),
// valid for every integer k. The alpha^2 exponent of each retained summand
// must agree across the table (checked; InvariantViolation otherwise).
RatFunc xi_k(const DecompTable& t, long long k);

// Per-table cache of xi_k values; thread-safe read-populate.
class XiSeries {
  public:
    explicit XiSeries(DecompTable t) : table_(std::move(t)) {}

    const DecompTable& table() const { return table_; }
    RatFunc at(long long k);

  private:
    DecompTable table_;
    std::map<long long, RatFunc> cache_;
    std::mutex mu_;
};

// Closure of (sigma_{i_1})^{k_1} ... (sigma_{i_{M-1}})^{k_{M-1}} with each
// generator appearing exactly once; the invariant depends only on the
// multiset of exponents.
struct BraidSpec {
    int strands = 1;                     // M >= 1
    std::vector<long long> exponents;    // k_1 .. k_{M-1}

    static BraidSpec from_exponents(std::vector<long long> ks);
    long long writhe() const;
    void validate() const;  // InvariantViolation on M < 1 or a length mismatch
};

// L = q^{-C(lam_alpha) * sum k_i} * prod_i xi_{k_i}.
RatFunc link_polynomial(XiSeries& xs, const BraidSpec& b);
RatFunc link_polynomial(const DecompTable& t, const BraidSpec& b);

// Casimir-invariant eigenvalues on V(mu) for typical mu = t.lam_alpha:
//   sum_nu (-1)^{parity} m_nu (chi_nu(c))^k (Gamma0 ratio) (D0 ratio),
// with c the sigma-squared central element, any integer k.
RatFunc casimir_eigenvalues_typical(const DecompTable& t, long long k);

struct SkippedTerm {
    std::size_t index = 0;
    std::string reason;
};

// Unitary-module variant: branching lists V0(nu) inside V0(mu) (x) V(Lambda)
// with Lambda = branching.lam_alpha. Terms with atypicality differing from
// mu's are skipped (reported through `skipped` when non-null); the Gamma0
// ratio is replaced by brackets over the nonvanishing odd pairings only.
// Requires k >= 1.
RatFunc casimir_eigenvalues_unitary(const RootSystem& rs, const Weight& mu,
                                    const DecompTable& branching, long long k,
                                    std::vector<SkippedTerm>* skipped = nullptr);

struct RecurrenceReport {
    bool ok = true;
    int order = 0;                       // recurrence length: 2 * distinct Casimir values
    long long windows = 0;               // residual windows verified
    long long first_failing_base = -1;   // lowest k with a nonzero residual, -1 if none
    std::string summary() const;
};

// Core check: s_k (k = 0..N) is annihilated by the recurrence with
// characteristic roots +-q^{C/2} over the distinct values of `casimirs`.
// Exact residual arithmetic; requires N >= order.
RecurrenceReport verify_exponential_sequence(const std::vector<RatFunc>& s,
                                             const std::vector<QuadExponent>& casimirs);

// Applies the core check to s_k = q^{k C(lam_alpha)} xi_k for k = 0..kmax.
RecurrenceReport spectral_recurrence_check(const DecompTable& t, long long kmax);

}  // namespace qlink
