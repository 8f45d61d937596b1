#include "pureshape/shape.hpp"

#include <algorithm>
#include <stdexcept>

#include "pureshape/errors.hpp"

namespace pureshape {

namespace {

int max_precision_for(Int p) {
    // Largest B with p^B <= 2^62, so modular arithmetic stays in uint64.
    int b = 0;
    unsigned __int128 v = 1;
    const unsigned __int128 lim = static_cast<unsigned __int128>(1) << 62;
    while (v * static_cast<unsigned __int128>(p) <= lim) {
        v *= static_cast<unsigned __int128>(p);
        ++b;
    }
    return b;
}

std::vector<BetaReduction> trivial_reductions(int n) {
    std::vector<BetaReduction> out;
    for (int m = 1; m <= n - 1; ++m)
        out.push_back({m, 1, std::vector<Int>(static_cast<std::size_t>(m), 0)});
    return out;
}

void set_reduction(std::vector<BetaReduction>& red, int m, Int modulus, std::vector<Int> coeffs) {
    red[static_cast<std::size_t>(m - 1)] = {m, modulus, std::move(coeffs)};
}

LocalShape local_shape_impl(Int a, int n, Int p, int e) {
    LocalShape s;
    s.p = p;
    s.e = e;
    s.v_a = vp(a, p);
    if (s.v_a > 0) {
        s.r = {-1, false};
        s.d = 0;
    } else {
        s.r = r_p(a, p, e + 8);
        s.d = std::max(0, std::min(s.r.value, e));
    }
    s.k.resize(static_cast<std::size_t>(n - 1));
    for (int m = 1; m <= n - 1; ++m)
        s.k[static_cast<std::size_t>(m - 1)] = k_pm(n, p, s.d, m);
    if (beta_fixture_available(n, p))
        s.beta = beta_fixture(n, p, mod_canonical(a, ipow(p, e + 1)));
    return s;
}

// CRT for x = r1 mod m1, x = r2 mod m2 with coprime moduli.
Int crt_pair(Int r1, Int m1, Int r2, Int m2) {
    Int x = r1;
    while (x % m2 != r2) x += m1;  // moduli here are tiny prime powers
    return x;
}

}  // namespace

std::optional<HViolation> hypothesis_violation(Int a, int n) {
    if (a == 0) throw std::domain_error("hypothesis: a must be nonzero");
    if (n < 3) throw std::domain_error("hypothesis: n must be at least 3");
    FactoredInteger fa = factorize(a);
    for (auto& [q, e] : fa.factors)
        if (e >= n) return HViolation{q, "a is divisible by the n-th power of " + std::to_string(q)};
    for (auto& [p, ep] : factorize(n).factors) {
        int va = 0;
        for (auto& [q, e] : fa.factors)
            if (q == p) va = e;
        if (va > 0 && va % p == 0)
            return HViolation{p, "v_p(a) = " + std::to_string(va) + " is divisible by p = " + std::to_string(p)};
    }
    return std::nullopt;
}

bool hypothesis_H(Int a, int n) { return !hypothesis_violation(a, n).has_value(); }

RpValue r_p(Int a, Int p, int precision) {
    if (a == 0) throw std::domain_error("r_p: a must be nonzero");
    if (p < 2) throw std::domain_error("r_p: p must be a prime >= 2");
    if (a % p == 0) return {-1, false};
    int cap = max_precision_for(p);
    int B = (precision <= 0) ? cap : std::min(precision, cap);
    if (B < 2) B = 2;
    std::uint64_t m = 1;
    for (int i = 0; i < B; ++i) m *= static_cast<std::uint64_t>(p);
    std::uint64_t base = static_cast<std::uint64_t>(mod_canonical(a, static_cast<Int>(m)));
    std::uint64_t t = powmod_u64(base, static_cast<std::uint64_t>(p - 1), m);
    if (t == 1) return {B - 1, true};
    return {vp(static_cast<Int>(t - 1), p) - 1, false};
}

int d_p(Int a, Int p, int e) {
    if (e < 1) throw std::domain_error("d_p: need e >= 1");
    RpValue r = r_p(a, p, e + 8);
    return std::max(0, std::min(r.value, e));
}

int k_pm(int n, Int p, int d, int m) {
    if (n < 3) throw std::domain_error("k_pm: n must be at least 3");
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("k_pm: p must divide n");
    if (d < 0 || d > e) throw std::domain_error("k_pm: need 0 <= d <= e");
    if (m < 1 || m > n - 1) throw std::domain_error("k_pm: need 1 <= m <= n-1");
    for (int k = d; k >= 1; --k) {
        Int pk = ipow(p, k);
        if (static_cast<Int>(m) >= static_cast<Int>(n) - static_cast<Int>(n) / pk) return k;
    }
    return 0;
}

Int C_m(Int a, int n, int m) {
    if (m < 0 || m > n - 1) throw std::domain_error("C_m: need 0 <= m <= n-1");
    SquarefreeDecomposition dec = squarefree_decomposition(a, n);
    Int c = 1;
    for (int j = 1; j <= n - 1; ++j) {
        int exp = (j * m) / n;
        c *= ipow(dec.part[static_cast<std::size_t>(j - 1)], exp);
    }
    return c;
}

LocalShape local_shape(Int a, int n, Int p) {
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("local_shape: p must divide n");
    if (auto v = hypothesis_violation(a, n))
        throw std::domain_error("local_shape: hypothesis fails at p = " + std::to_string(v->p) +
                                " (" + v->reason + ")");
    return local_shape_impl(a, n, p, e);
}

GlobalShape global_shape(Int a, int n) {
    if (auto v = hypothesis_violation(a, n))
        throw std::domain_error("global_shape: hypothesis fails at p = " + std::to_string(v->p) +
                                " (" + v->reason + ")");
    GlobalShape g;
    g.n = n;
    for (auto& [p, e] : factorize(n).factors)
        g.locals.push_back(local_shape_impl(a, n, p, e));
    return g;
}

std::vector<BasisElement> basis_description(Int a, int n) {
    if (n < 3) throw std::domain_error("basis_description: n must be at least 3");
    if (a == 0) throw std::domain_error("basis_description: a must be nonzero");
    if (!is_nth_power_free(a, n))
        throw std::domain_error("basis_description: a must be n-th-power-free");

    struct PrimeData {
        Int p;
        std::vector<int> k;
        bool fixture;
        std::vector<BetaReduction> beta;
    };
    std::vector<PrimeData> primes;
    for (auto& [p, e] : factorize(n).factors) {
        LocalShape s = local_shape_impl(a, n, p, e);
        PrimeData d{p, s.k, s.beta.has_value(), {}};
        if (d.fixture) d.beta = *s.beta;
        primes.push_back(std::move(d));
    }

    std::vector<BasisElement> out;
    out.push_back({0, 1, 1, 1, std::vector<Int>{}});
    for (int m = 1; m <= n - 1; ++m) {
        BasisElement b;
        b.m = m;
        b.c = C_m(a, n, m);
        b.p_part = 1;
        bool renderable = true;
        for (auto& pd : primes) {
            int k = pd.k[static_cast<std::size_t>(m - 1)];
            b.p_part *= ipow(pd.p, k);
            if (k > 0 && !pd.fixture) renderable = false;
        }
        b.denom = b.c * b.p_part;
        if (renderable) {
            std::vector<Int> coeffs(static_cast<std::size_t>(m), 0);
            Int mod_so_far = 1;
            for (auto& pd : primes) {
                int k = pd.k[static_cast<std::size_t>(m - 1)];
                if (k == 0 || !pd.fixture) continue;
                const BetaReduction& red = pd.beta[static_cast<std::size_t>(m - 1)];
                for (int i = 0; i < m; ++i) {
                    Int c = coeffs[static_cast<std::size_t>(i)];
                    coeffs[static_cast<std::size_t>(i)] =
                        crt_pair(c % mod_so_far, mod_so_far, red.coeffs[static_cast<std::size_t>(i)], red.modulus);
                }
                mod_so_far *= red.modulus;
            }
            b.beta = std::move(coeffs);
        }
        out.push_back(std::move(b));
    }
    return out;
}

bool beta_fixture_available(int n, Int p) {
    return (n == 4 && p == 2) || (n == 6 && p == 2) || (n == 6 && p == 3);
}

std::vector<BetaReduction> beta_fixture(int n, Int p, Int residue) {
    if (!beta_fixture_available(n, p))
        throw unsupported_error("beta_fixture: no stored reductions for this (n, p)");
    int e = vp(static_cast<Int>(n), p);
    Int c = mod_canonical(residue, ipow(p, e + 1));
    std::vector<BetaReduction> red = trivial_reductions(n);
    if (n == 4 && p == 2) {
        if (c == 1) {
            set_reduction(red, 2, 2, {1, 0});
            set_reduction(red, 3, 4, {1, 1, 1});
        } else if (c == 5) {
            set_reduction(red, 2, 2, {1, 0});
            set_reduction(red, 3, 2, {0, 1, 0});
        }
    } else if (n == 6 && p == 2) {
        if (c == 1) {
            set_reduction(red, 3, 2, {1, 0, 0});
            set_reduction(red, 4, 2, {0, 1, 0, 0});
            set_reduction(red, 5, 2, {0, 0, 1, 0, 0});
        }
    } else {  // n == 6, p == 3
        if (c == 1) {
            set_reduction(red, 4, 3, {1, 0, 1, 0});
            set_reduction(red, 5, 3, {0, 1, 0, 1, 0});
        } else if (c == 8) {
            set_reduction(red, 4, 3, {1, 0, 2, 0});
            set_reduction(red, 5, 3, {0, 1, 0, 2, 0});
        }
    }
    return red;
}

bool shape_equal(const LocalShape& x, const LocalShape& y) {
    if (x.p != y.p || x.e != y.e) return false;
    if ((x.v_a == 0) != (y.v_a == 0)) return false;
    if (x.d != y.d || x.k != y.k) return false;
    if (x.beta.has_value() != y.beta.has_value()) return false;
    if (x.beta) {
        if (x.beta->size() != y.beta->size()) return false;
        for (std::size_t i = 0; i < x.beta->size(); ++i) {
            const BetaReduction& bx = (*x.beta)[i];
            const BetaReduction& by = (*y.beta)[i];
            if (bx.m != by.m || bx.modulus != by.modulus || bx.coeffs != by.coeffs) return false;
        }
    }
    return true;
}

bool shape_equal(const GlobalShape& x, const GlobalShape& y) {
    if (x.n != y.n || x.locals.size() != y.locals.size()) return false;
    for (std::size_t i = 0; i < x.locals.size(); ++i)
        if (!shape_equal(x.locals[i], y.locals[i])) return false;
    return true;
}

std::vector<std::vector<int>> k_pattern(const GlobalShape& s) {
    std::vector<std::vector<int>> out;
    for (auto& l : s.locals) out.push_back(l.k);
    return out;
}

std::string render_basis_element(const BasisElement& b) {
    if (b.m == 0) return "1";
    std::string num;
    auto term = [](Int coef, int power) {
        std::string t;
        if (power == 0) return std::to_string(coef);
        if (coef != 1) t += std::to_string(coef) + "*";
        t += power == 1 ? "theta" : "theta^" + std::to_string(power);
        return t;
    };
    num = term(1, b.m);
    if (b.beta) {
        for (int i = b.m - 1; i >= 0; --i) {
            Int c = (*b.beta)[static_cast<std::size_t>(i)];
            if (c != 0) num += " + " + term(c, i);
        }
    } else {
        num += " + beta_" + std::to_string(b.m);
    }
    if (b.denom == 1) return num;
    return "(" + num + ")/" + std::to_string(b.denom);
}

}  // namespace pureshape
