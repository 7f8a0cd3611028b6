#pragma once

#include "qlink/arith.hpp"

#include <string>
#include <vector>

namespace qlink {

// The two algebra families: gl(m|n) and osp(2|2n). For OSP the even rank
// slot m is fixed to 1 (the single eps_0 basis element).
enum class FamilyTag { GL, OSP };

struct AlgebraKind {
    FamilyTag tag;
    int m, n;

    static AlgebraKind gl(int m, int n) { return {FamilyTag::GL, m, n}; }
    static AlgebraKind osp(int n) { return {FamilyTag::OSP, 1, n}; }

    int basis_size() const { return m + n; }
    friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
    std::string to_string() const;
};

// One weight coordinate: a + b*alpha with exact rational a, b.
struct AffineRat {
    Rat a{}, b{};

    friend bool operator==(const AffineRat&, const AffineRat&) = default;
    AffineRat operator+(const AffineRat& o) const { return {a + o.a, b + o.b}; }
    AffineRat operator-(const AffineRat& o) const { return {a - o.a, b - o.b}; }
    AffineRat operator-() const { return {-a, -b}; }
    AffineRat scaled(const Rat& s) const { return {a * s, b * s}; }
    Rat at(const Rat& alpha0) const { return a + b * alpha0; }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string to_string() const;
};

// Weight in the eps/delta basis: eps_1..eps_m, delta_1..delta_n for GL and
// eps_0, eps_1..eps_n for OSP. Coordinates are affine in alpha.
struct Weight {
    AlgebraKind kind;
    std::vector<AffineRat> coords;

    friend bool operator==(const Weight&, const Weight&) = default;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(const Rat& s) const;
    bool is_zero() const;
    std::string to_string() const;
};

Weight zero_weight(const AlgebraKind& kind);

// Highest weight of the one-parameter vector family: alpha*delta with
// delta = sum of the delta_j (GL) or alpha*eps_0 (OSP).
Weight family_highest(const AlgebraKind& kind);

struct RootSystem {
    AlgebraKind kind;
    std::vector<Weight> even_pos;  // Phi_0^+
    std::vector<Weight> odd_pos;   // Phi_1^+
    Weight rho;                    // graded half-sum of positive roots
    std::vector<int> metric;       // +-1 per basis slot
};

// Throws InvalidRank unless m, n >= 1.
RootSystem make_algebra(const AlgebraKind& kind);

// Invariant bilinear form, expanded as a polynomial in alpha of degree <= 2.
// Throws KindMismatch when x, y, rs disagree.
QuadExponent bilinear(const RootSystem& rs, const Weight& x, const Weight& y);

// C(lam) = (lam, lam + 2 rho).
QuadExponent casimir(const RootSystem& rs, const Weight& lam);

// Number of beta in Phi_1^+ with (lam + rho, beta) identically zero in alpha.
int atypicality_index(const RootSystem& rs, const Weight& lam);

enum class Unitarity { Type1, Type2, NonUnitary };
std::string to_string(Unitarity u);

// Exact evaluation of the type (1) / type (2) unitarity conditions at the
// concrete alpha0. Type1 is reported when both hold.
Unitarity unitarity_class(const RootSystem& rs, const Weight& lam, const Rat& alpha0);

// D0_q(lam) = prod over even positive roots of [(lam+rho,beta)]_q/[(rho,beta)]_q.
// Throws NonRepresentableBracketArgument when some (lam+rho,beta) has an
// alpha^2 part, a non-integer alpha coefficient, or a non-half-integer
// constant part.
RatFunc q_dimension(const RootSystem& rs, const Weight& lam);

// Eigenvalue of the even central element: the same product over odd positive
// roots. Roots with (rho,beta) = 0 contribute their numerator bracket
// unnormalized, and a factor with (lam+rho,beta) identical to (rho,beta)
// contributes 1, so the value is 1 at lam = 0.
RatFunc gamma0_eigenvalue(const RootSystem& rs, const Weight& lam);

// q -> 1 limit of q_dimension at alpha = alpha0; must be a positive integer
// (else NonIntegralDimension).
Int classical_dim0(const RootSystem& rs, const Weight& lam, const Rat& alpha0);

// Weight literal syntax: GL `(a1,...,am|b1,...,bn)`, OSP `(b|a1,...,an)`,
// each entry `r`, `s*al`, or `r+s*al` with rational r, s. Whitespace is
// ignored. Throws ParseError.
Weight parse_weight(const AlgebraKind& kind, const std::string& text);

}  // namespace qlink
