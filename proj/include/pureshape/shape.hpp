#ifndef PURESHAPE_SHAPE_HPP_
#define PURESHAPE_SHAPE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pureshape/arith.hpp"

namespace pureshape {

// The standing hypothesis on (a, n): a is n-th-power-free and for every
// p | n either p does not divide a or p does not divide v_p(a).
struct HViolation {
    Int p;
    std::string reason;
};

std::optional<HViolation> hypothesis_violation(Int a, int n);
bool hypothesis_H(Int a, int n);

// r_p(a) = v_p(a^{p-1} - 1) - 1 for p coprime to a, and -1 for p | a.
// Computed modulo p^B; when a^{p-1} == 1 mod p^B the true valuation is >= B
// and the result is reported as B-1 with at_precision_cap set.
struct RpValue {
    int value;
    bool at_precision_cap;
};

RpValue r_p(Int a, Int p, int precision = 0);  // precision 0: widest 64-bit-safe cap
int d_p(Int a, Int p, int e);                  // max(0, min(r_p(a), e))
int k_pm(int n, Int p, int d, int m);          // largest k in [0, d] with m >= n - n/p^k
Int C_m(Int a, int n, int m);                  // prod a_j^{floor(j m / n)}

// Reduction of the numerator correction beta_m modulo p^{k_{p,m}},
// as coefficients of 1, theta, ..., theta^{m-1}.  modulus == 1 is the
// trivial reduction.
struct BetaReduction {
    int m;
    Int modulus;
    std::vector<Int> coeffs;
};

struct LocalShape {
    Int p;
    int e;                    // p^e || n
    int v_a;                  // v_p(a)
    RpValue r;                // value -1 when p | a
    int d;                    // max(0, min(r, e))
    std::vector<int> k;       // k[m-1] = k_{p,m}, m = 1..n-1
    std::optional<std::vector<BetaReduction>> beta;  // present iff fixtures cover (n, p)
};

struct GlobalShape {
    int n;
    std::vector<LocalShape> locals;  // ascending p over p | n
};

// Basis element (theta^m + beta_m) / (C_m(a) * prod_p p^{k_{p,m}}); m = 0 is 1.
struct BasisElement {
    int m;
    Int c;                    // C_m(a)
    Int p_part;               // prod_{p | n} p^{k_{p,m}}
    Int denom;                // c * p_part
    // Coefficients of beta_m mod p_part (CRT over the fixture reductions);
    // absent when some prime with k_{p,m} > 0 has no fixture.
    std::optional<std::vector<Int>> beta;
};

LocalShape local_shape(Int a, int n, Int p);   // requires the hypothesis
GlobalShape global_shape(Int a, int n);        // requires the hypothesis
std::vector<BasisElement> basis_description(Int a, int n);  // requires n-th-power-free a

// Frozen numerator reductions for (n, p) in {(4,2), (6,2), (6,3)}, keyed by
// the residue of a mod p^{e+1}.  Uncovered (n, p) is an unsupported_error.
std::vector<BetaReduction> beta_fixture(int n, Int p, Int residue);
bool beta_fixture_available(int n, Int p);

bool shape_equal(const LocalShape& x, const LocalShape& y);
bool shape_equal(const GlobalShape& x, const GlobalShape& y);

// Denominator pattern: the per-prime k-sequences only.  This is the key used
// when grouping residue classes into shape classes for density statements.
std::vector<std::vector<int>> k_pattern(const GlobalShape& s);

std::string render_basis_element(const BasisElement& b);  // human-readable

}  // namespace pureshape

#endif  // PURESHAPE_SHAPE_HPP_
