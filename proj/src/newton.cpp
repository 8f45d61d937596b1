#include "pureshape/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pureshape/errors.hpp"

namespace pureshape {
namespace {

namespace bm = boost::multiprecision;

int vp_big(const BigInt& value, Int p) {
    if (value == 0) throw std::domain_error("vp_big: zero value");
    BigInt m = bm::abs(value);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

BigInt pow_big(Int base, int exp) {
    return bm::pow(BigInt(base), static_cast<unsigned>(exp));
}

Int floor_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

// Canonical residue of a big value mod p.
Int big_mod_p(const BigInt& value, Int p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    return r.convert_to<Int>();
}

int poly_degree(const std::vector<Int>& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;
}

std::vector<Int> poly_mod(std::vector<Int> r, const std::vector<Int>& d, Int p) {
    int dd = poly_degree(d);
    Int lead = d[dd];
    Int inv = powmod_u64(mod_canonical(lead, p), p - 2, p);
    int dr = poly_degree(r);
    while (dr >= dd) {
        Int factor = mulmod_u64(mod_canonical(r[dr], p), inv, p);
        for (int i = 0; i <= dd; ++i) {
            Int t = mulmod_u64(factor, mod_canonical(d[i], p), p);
            r[dr - dd + i] = mod_canonical(r[dr - dd + i] - t, p);
        }
        dr = poly_degree(r);
    }
    r.resize(dr + 1);
    return r;
}

int poly_gcd_degree(std::vector<Int> a, std::vector<Int> b, Int p) {
    while (poly_degree(b) >= 0) {
        std::vector<Int> r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_degree(a);
}

}  // namespace

std::optional<Int> nth_root_mod_p(Int a, int n, Int p) {
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("nth_root_mod_p: p must be prime");
    Int target = mod_canonical(a, p);
    if (target == 0) throw std::domain_error("nth_root_mod_p: p divides a");
    for (Int u = 1; u < p; ++u)
        if (powmod_u64(u, n, p) == target) return u;
    return std::nullopt;
}

namespace {

PhiExpansion expansion_for_root(Int a, int n, Int p, Int u) {
    PhiExpansion ex;
    ex.n = n;
    ex.p = p;
    ex.a = a;
    ex.ramified = false;
    ex.u = u;
    ex.coeff.assign(n + 1, BigInt(0));

    // coeff[i] = binom(n, i) * u^(n-i) for i >= 1, via f(x) = ((x - u) + u)^n - a.
    BigInt binom = 1;
    std::vector<BigInt> upow(n + 1);
    upow[0] = 1;
    for (int i = 1; i <= n; ++i) upow[i] = upow[i - 1] * u;
    ex.coeff[0] = upow[n] - a;
    for (int i = 1; i <= n; ++i) {
        binom = binom * (n - i + 1) / i;
        ex.coeff[i] = binom * upow[n - i];
    }
    return ex;
}

void check_expansion_args(Int a, int n, Int p) {
    if (n < 2) throw std::domain_error("phi_expansion: need n >= 2");
    if (a == 0) throw std::domain_error("phi_expansion: a must be nonzero");
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("phi_expansion: p must be prime");
}

}  // namespace

PhiExpansion phi_expansion(Int a, int n, Int p) {
    check_expansion_args(a, n, p);

    if (a % p == 0) {
        PhiExpansion ex;
        ex.n = n;
        ex.p = p;
        ex.a = a;
        ex.ramified = true;
        ex.u = 0;
        ex.coeff.assign(n + 1, BigInt(0));
        ex.coeff[0] = BigInt(-a);
        ex.coeff[n] = 1;
        return ex;
    }

    auto root = nth_root_mod_p(a, n, p);
    if (!root)
        throw unsupported_error("phi_expansion: a has no n-th root mod p, no degree-one key polynomial exists");
    return expansion_for_root(a, n, p, *root);
}

std::vector<HullPoint> lower_hull_vertices(std::vector<HullPoint> pts) {
    if (pts.empty()) return {};
    std::sort(pts.begin(), pts.end(),
              [](const HullPoint& l, const HullPoint& r) { return l.x != r.x ? l.x < r.x : l.y < r.y; });
    std::vector<HullPoint> uniq;
    for (const auto& pt : pts)
        if (uniq.empty() || uniq.back().x != pt.x) uniq.push_back(pt);

    std::vector<HullPoint> hull;
    for (const auto& pt : uniq) {
        while (hull.size() >= 2) {
            const HullPoint& h0 = hull[hull.size() - 2];
            const HullPoint& h1 = hull[hull.size() - 1];
            Int cross = (h1.x - h0.x) * (pt.y - h0.y) - (h1.y - h0.y) * (pt.x - h0.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    return hull;
}

std::vector<Side> lower_hull(const std::vector<HullPoint>& pts) {
    if (pts.size() < 2) throw std::domain_error("lower_hull: need at least 2 points");
    std::vector<HullPoint> hull = lower_hull_vertices(pts);
    std::vector<Side> sides;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        Int dx = hull[i + 1].x - hull[i].x;
        Int dy = hull[i + 1].y - hull[i].y;
        if (dy >= 0) break;  // sides come in increasing slope; principal part is over
        Int g = std::gcd(-dy, dx);
        sides.push_back({hull[i], hull[i + 1], dy / g, dx / g});
    }
    return sides;
}

std::vector<HullPoint> expansion_points(const PhiExpansion& ex, bool include_constant) {
    std::vector<HullPoint> pts;
    for (int i = include_constant ? 0 : 1; i <= ex.n; ++i) {
        if (ex.coeff[i] == 0) continue;
        pts.push_back({i, vp_big(ex.coeff[i], ex.p)});
    }
    return pts;
}

ResidualPolynomial residual_polynomial(const PhiExpansion& ex, const Side& side) {
    Int h = -side.slope_num;
    Int den = side.slope_den;
    Int deg = side.degree();
    ResidualPolynomial res;
    res.side = side;
    res.coeffs.assign(deg + 1, 0);
    for (Int j = 0; j <= deg; ++j) {
        Int x = side.from.x + j * den;
        Int need = side.from.y - j * h;
        if (x < 0 || x > ex.n) throw std::logic_error("residual_polynomial: side leaves the expansion");
        const BigInt& value = ex.coeff[x];
        if (value == 0) continue;  // point at infinity, residual digit is 0
        BigInt pk = pow_big(ex.p, static_cast<int>(need));
        if (value % pk != 0) throw std::logic_error("residual_polynomial: point below its side");
        res.coeffs[j] = big_mod_p(value / pk, ex.p);
    }
    return res;
}

bool separable_mod_p(const std::vector<Int>& coeffs, Int p) {
    int deg = poly_degree(coeffs);
    if (deg <= 0) return true;
    std::vector<Int> deriv(deg, 0);
    for (int i = 1; i <= deg; ++i) deriv[i - 1] = mulmod_u64(mod_canonical(coeffs[i], p), i % p, p);
    if (poly_degree(deriv) < 0) return false;  // derivative vanishes mod p
    std::vector<Int> f(coeffs.begin(), coeffs.begin() + deg + 1);
    for (Int& c : f) c = mod_canonical(c, p);
    return poly_gcd_degree(f, deriv, p) == 0;
}

Int polygon_index_bound(const std::vector<Side>& principal) {
    Int count = 0;
    for (const Side& s : principal) {
        for (Int x = std::max<Int>(s.from.x, 1); x < s.to.x; ++x) {
            Int num = s.from.y * s.slope_den + (x - s.from.x) * s.slope_num;
            Int below = floor_div(num, s.slope_den);
            if (below > 0) count += below;
        }
    }
    if (!principal.empty()) {
        const Side& last = principal.back();
        if (last.to.x >= 1 && last.to.y > 0) count += last.to.y;
    }
    return count;
}

namespace {

Order1Report analyze_expansion(PhiExpansion ex) {
    Order1Report rep{std::move(ex), {}, {}, true, {}, 0};
    rep.principal = lower_hull(expansion_points(rep.expansion, true));
    for (std::size_t i = 0; i < rep.principal.size(); ++i) {
        rep.residuals.push_back(residual_polynomial(rep.expansion, rep.principal[i]));
        if (!separable_mod_p(rep.residuals.back().coeffs, rep.expansion.p)) {
            rep.residuals_separable = false;
            rep.nonseparable.push_back(static_cast<int>(i));
        }
    }
    rep.index_bound = polygon_index_bound(rep.principal);
    return rep;
}

}  // namespace

Order1Report order1_analysis(Int a, int n, Int p) {
    return analyze_expansion(phi_expansion(a, n, p));
}

bool order1_zero_index(Int a, int n, Int p) {
    check_expansion_args(a, n, p);
    if (a % p == 0) return order1_analysis(a, n, p).certifies_zero_index();
    Int target = mod_canonical(a, p);
    bool any = false;
    for (Int u = 1; u < p; ++u) {
        if (powmod_u64(u, n, p) != target) continue;
        any = true;
        if (!analyze_expansion(expansion_for_root(a, n, p, u)).certifies_zero_index()) return false;
    }
    if (!any)
        throw unsupported_error("order1_zero_index: a has no n-th root mod p, no degree-one key polynomial exists");
    return true;
}

namespace {

bool sides_equal(const std::vector<Side>& a, const std::vector<Side>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].from == b[i].from && a[i].to == b[i].to)) return false;
    return true;
}

bool on_side_line(const Side& s, Int x, Int y) {
    // (y - from.y) * den == (x - from.x) * num, with x within the side span.
    if (x < s.from.x || x > s.to.x) return false;
    return (y - s.from.y) * s.slope_den == (x - s.from.x) * s.slope_num;
}

}  // namespace

DigitReport verify_one_more_digit(int n, Int p, int reps_per_class) {
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("verify_one_more_digit: p must be prime");
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("verify_one_more_digit: p must divide n");
    if (reps_per_class < 2) throw std::domain_error("verify_one_more_digit: need at least 2 representatives");

    DigitReport rep{n, p, true, 0, {}};
    Int p2 = p * p;
    Int xlo = ipow(p, e - 1), xhi = ipow(p, e);

    auto fail = [&rep](Int cls, const std::string& what) {
        std::ostringstream os;
        os << "class " << cls << " mod p^2: " << what;
        rep.failures.push_back(os.str());
        rep.pass = false;
    };

    for (Int c = 1; c < p2; ++c) {
        if (c % p == 0) continue;
        auto root = nth_root_mod_p(c, n, p);
        if (!root) continue;
        ++rep.classes_checked;

        std::vector<Int> offsets{-1};
        for (int j = 0; j + 1 < reps_per_class; ++j) offsets.push_back(j);

        bool have_base = false;
        int base_dichotomy = 0;
        std::vector<Side> base_sides;
        std::vector<std::vector<Int>> base_residuals;
        for (Int off : offsets) {
            Int a = c + off * p2;
            if (a == 0) continue;
            PhiExpansion ex = expansion_for_root(a, n, p, *root);
            // min(v_p(u^n - a), 2); the degenerate a = u^n counts as >= 2.
            int dich = ex.coeff[0] == 0 ? 2 : std::min(vp_big(ex.coeff[0], p), 2);
            std::vector<Side> sides = lower_hull(expansion_points(ex, true));
            std::vector<std::vector<Int>> residuals;
            for (const Side& s : sides) residuals.push_back(residual_polynomial(ex, s).coeffs);

            // With v >= 2 the hull passes through (p^(e-1), 1) and (p^e, 0) on one
            // side; with v = 1 the whole polygon is the single side from (0, 1).
            if (dich == 2) {
                bool drop = false;
                for (const Side& s : sides)
                    if (on_side_line(s, xlo, 1) && on_side_line(s, xhi, 0)) drop = true;
                if (!drop) fail(c, "terminal unit-height drop missing from the hull");
            }

            if (!have_base) {
                have_base = true;
                base_dichotomy = dich;
                base_sides = sides;
                base_residuals = residuals;
                continue;
            }
            if (dich != base_dichotomy) fail(c, "precision dichotomy differs between representatives");
            if (base_dichotomy == 1 &&
                (!sides_equal(sides, base_sides) || residuals != base_residuals))
                fail(c, "order-1 polygon data differs between representatives with v = 1");
        }
    }
    return rep;
}

KummerReport verify_kummer_lattice(int n, Int p) {
    if (n < 2) throw std::domain_error("verify_kummer_lattice: need n >= 2");
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("verify_kummer_lattice: p must be prime");
    int e = vp(n, p);
    KummerReport rep{n, p, e, e == 0, true, 0, {}};
    if (rep.vacuous) return rep;

    // The binomial valuations themselves do not depend on the residue class.
    for (int i = 1; i <= n; ++i) {
        int kv = kummer_binomial_valuation(n, i, p);
        int need = e - vp(i, p);
        if (kv < need) {
            std::ostringstream os;
            os << "binom(" << n << "," << i << ") has v_" << p << " = " << kv << " < " << need;
            rep.failures.push_back(os.str());
            rep.pass = false;
        }
    }

    std::vector<HullPoint> chain;
    for (int k = 0; k <= e; ++k) chain.push_back({ipow(p, k), e - k});

    Int mod = ipow(p, e + 2);
    for (Int c = 1; c < mod; ++c) {
        if (c % p == 0) continue;
        if (!nth_root_mod_p(c, n, p)) continue;
        ++rep.classes_checked;
        PhiExpansion ex = phi_expansion(c, n, p);

        std::vector<HullPoint> verts = lower_hull_vertices(expansion_points(ex, false));
        std::vector<HullPoint> inner;
        for (const auto& v : verts)
            if (v.x >= 1 && v.x <= chain.back().x) inner.push_back(v);
        if (inner != chain) {
            std::ostringstream os;
            os << "a = " << c << ": binomial hull vertices differ from the (p^k, e-k) chain";
            rep.failures.push_back(os.str());
            rep.pass = false;
        }

        for (const Side& s : lower_hull(expansion_points(ex, true))) {
            if (s.from.x >= 1 && s.height() != 1) {
                std::ostringstream os;
                os << "a = " << c << ": side from (" << s.from.x << "," << s.from.y << ") to ("
                   << s.to.x << "," << s.to.y << ") has height " << s.height();
                rep.failures.push_back(os.str());
                rep.pass = false;
            }
        }
    }
    return rep;
}

}  // namespace pureshape
