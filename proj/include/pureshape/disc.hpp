#ifndef PURESHAPE_DISC_HPP_
#define PURESHAPE_DISC_HPP_

#include "pureshape/arith.hpp"
#include "pureshape/shape.hpp"

namespace pureshape {

// Local field-discriminant data at p | n, with t = min(r_p(a), e_p).
struct DiscLocalReport {
    Int a;
    int n;
    Int p;
    int e;          // p^e || n
    Int n_p;        // n / p^e
    int t;          // in [-1, e]; -1 when p | a
    Int valuation;  // v_p(disc of the degree-n field)
};

// v_p = n*e for t <= 0, and n*e - 2*n_p*sum_{j=1..t} p^{e-j} for t >= 1.
Int disc_valuation(int n, Int p, int t);

// disc_valuation(n,p,t) - disc_valuation(n,p,t+1) for 0 <= t <= e-1;
// equals 2 * n_p * p^{e-(t+1)}.
Int disc_jump(int n, Int p, int t);

DiscLocalReport disc_report(Int a, int n, Int p);  // requires the hypothesis

}  // namespace pureshape

#endif  // PURESHAPE_DISC_HPP_
