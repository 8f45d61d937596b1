#include "pureshape/disc.hpp"

#include <algorithm>
#include <stdexcept>

namespace pureshape {

Int disc_valuation(int n, Int p, int t) {
    if (n < 3) throw std::domain_error("disc_valuation: n must be at least 3");
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("disc_valuation: p must divide n");
    if (t < -1 || t > e) throw std::domain_error("disc_valuation: need -1 <= t <= e");
    Int v = static_cast<Int>(n) * e;
    if (t >= 1) {
        Int n_p = n / ipow(p, e);
        Int tail = 0;
        for (int j = 1; j <= t; ++j) tail += ipow(p, e - j);
        v -= 2 * n_p * tail;
    }
    return v;
}

Int disc_jump(int n, Int p, int t) {
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("disc_jump: p must divide n");
    if (t < 0 || t > e - 1) throw std::domain_error("disc_jump: need 0 <= t <= e-1");
    return disc_valuation(n, p, t) - disc_valuation(n, p, t + 1);
}

DiscLocalReport disc_report(Int a, int n, Int p) {
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("disc_report: p must divide n");
    if (auto v = hypothesis_violation(a, n))
        throw std::domain_error("disc_report: hypothesis fails at p = " + std::to_string(v->p) +
                                " (" + v->reason + ")");
    DiscLocalReport rep;
    rep.a = a;
    rep.n = n;
    rep.p = p;
    rep.e = e;
    rep.n_p = n / ipow(p, e);
    if (vp(a, p) > 0) {
        rep.t = -1;
    } else {
        RpValue r = r_p(a, p, e + 8);
        rep.t = std::min(r.value, e);
    }
    rep.valuation = disc_valuation(n, p, rep.t);
    return rep;
}

}  // namespace pureshape
