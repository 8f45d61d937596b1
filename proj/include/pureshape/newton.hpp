#ifndef PURESHAPE_NEWTON_HPP_
#define PURESHAPE_NEWTON_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pureshape/arith.hpp"

namespace pureshape {

using BigInt = boost::multiprecision::cpp_int;

// Smallest u in [1, p) with u^n = a mod p; p must not divide a.
std::optional<Int> nth_root_mod_p(Int a, int n, Int p);

// Development of x^n - a in powers of the key polynomial phi.
// Unit branch (p coprime to a): phi = x - u, coeff[i] = binom(n,i) u^{n-i}
// for i >= 1 and coeff[0] = u^n - a.  Ramified branch (p | a): phi = x,
// coeff[0] = -a and coeff[n] = 1.
struct PhiExpansion {
    int n;
    Int p;
    Int a;
    bool ramified;
    Int u;                        // 0 on the ramified branch
    std::vector<BigInt> coeff;    // index 0..n
};

PhiExpansion phi_expansion(Int a, int n, Int p);

struct HullPoint {
    Int x;
    Int y;
    bool operator==(const HullPoint&) const = default;
};

struct Side {
    HullPoint from, to;
    Int slope_num, slope_den;     // reduced, den > 0
    Int height() const { return from.y - to.y; }
    Int length() const { return to.x - from.x; }
    Int degree() const { return length() / slope_den; }
};

// Lower convex hull, collinear points merged into one side.
std::vector<HullPoint> lower_hull_vertices(std::vector<HullPoint> pts);
// Negative-slope (principal) sides of the lower hull.
std::vector<Side> lower_hull(const std::vector<HullPoint>& pts);

// Finite-valuation points (i, v_p(coeff[i])); zero coefficients are skipped.
std::vector<HullPoint> expansion_points(const PhiExpansion& ex, bool include_constant = true);

struct ResidualPolynomial {
    Side side;
    std::vector<Int> coeffs;      // c_0..c_degree over F_p
};

// Residual along a side: c_j = coeff[s + j*den] / p^{u_s - j*h} mod p.
ResidualPolynomial residual_polynomial(const PhiExpansion& ex, const Side& side);

bool separable_mod_p(const std::vector<Int>& coeffs, Int p);

// Lattice points with x >= 1, y >= 1 lying on or below the principal polygon.
// This bounds v_p of the index of the order generated by a root; the bound is
// attained exactly when every residual is separable.
Int polygon_index_bound(const std::vector<Side>& principal);

struct Order1Report {
    PhiExpansion expansion;
    std::vector<Side> principal;
    std::vector<ResidualPolynomial> residuals;
    bool residuals_separable;
    std::vector<int> nonseparable;   // indices into residuals
    Int index_bound;
    // True when the order-1 analysis certifies that p does not divide the
    // index: the polygon bound is zero (which forces a single side with
    // separable degree-1 residual).
    bool certifies_zero_index() const { return residuals_separable && index_bound == 0; }
};

// Report for the branch of the smallest root u (or the ramified branch).
Order1Report order1_analysis(Int a, int n, Int p);
// Zero-index certificate over every degree-one branch: for each root u of
// x^n = a mod p (or phi = x when p | a) the polygon admits no lattice point,
// so p cannot divide the index of Z[theta] on those branches.  For x^n - a
// with p | n this decides d_p = 0; for p coprime to n*a the index is 0
// unconditionally.
bool order1_zero_index(Int a, int n, Int p);

// Desk verification that the order-1 data visible at precision p^2 is a
// class function of a mod p^2, over all unit classes admitting a root:
//   - the dichotomy min(v_p(u^n - a), 2) is constant on the class;
//   - when v = 1 the whole principal polygon and every residual coincide;
//   - when v >= 2 one hull side joins (p^(e-1), 1) to (p^e, 0); the drop's
//     digits are binomial, hence independent of a.
struct DigitReport {
    int n;
    Int p;
    bool pass;
    Int classes_checked;
    std::vector<std::string> failures;
};

DigitReport verify_one_more_digit(int n, Int p, int reps_per_class = 4);

// Checks, over all unit residues mod p^{e+2} admitting a root, that the
// binomial part of the polygon is exactly the chain (p^k, e-k), k = 0..e,
// and that every principal side starting at abscissa >= 1 has height 1.
struct KummerReport {
    int n;
    Int p;
    int e;
    bool vacuous;                 // p does not divide n
    bool pass;
    Int classes_checked;
    std::vector<std::string> failures;
};

KummerReport verify_kummer_lattice(int n, Int p);

}  // namespace pureshape

#endif  // PURESHAPE_NEWTON_HPP_
