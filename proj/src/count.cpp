#include "pureshape/count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "pureshape/errors.hpp"
#include "pureshape/shape.hpp"
#include "pureshape/table.hpp"

namespace pureshape {
namespace {

constexpr Int kEnumerationBudget = 100'000'000;

Int memory_budget_bytes() {
    Int mb = 256;
    if (const char* env = std::getenv("PURESHAPE_MEMORY_MB")) {
        char* end = nullptr;
        long long parsed = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) mb = parsed;
    }
    return mb * 1024 * 1024;
}

void check_progression_args(Int X, Int q, Int r, int n) {
    if (X < 1) throw std::domain_error("count: need X >= 1");
    if (q < 1) throw std::domain_error("count: need q >= 1");
    if (r < 0 || r >= q) throw std::domain_error("count: need 0 <= r < q");
    if (n < 2) throw std::domain_error("count: need n >= 2");
}

int capped_class_valuation(Int r, Int p, int alpha) {
    Int pa = ipow(p, alpha);
    if (r % pa == 0) return alpha;
    return vp(r, p);
}

}  // namespace

AdmissibilityVerdict admissibility(Int r, Int q, int n) {
    check_progression_args(1, q, mod_canonical(r, q), n);
    r = mod_canonical(r, q);
    AdmissibilityVerdict out{Admissibility::Strict, {}};
    for (const auto& [p, alpha] : factorize(q).factors) {
        int v = capped_class_valuation(r, p, alpha);
        out.witnesses.push_back({p, alpha, v});
        if (alpha >= n && v >= n)
            out.verdict = Admissibility::Inadmissible;
        else if (out.verdict == Admissibility::Strict && v >= std::min<int>(alpha, n))
            out.verdict = Admissibility::Weak;
    }
    return out;
}

Int count_exact(Int X, Int q, Int r, int n) {
    r = mod_canonical(r, q);
    check_progression_args(X, q, r, n);

    // Prime bases p with p^n <= X; n-th-power-free means no such p^n divides.
    std::vector<Int> powers;
    for (Int p : small_primes()) {
        Int pn;
        try {
            pn = ipow(p, n);
        } catch (const size_error&) {
            break;
        }
        if (pn > X) break;
        powers.push_back(pn);
    }
    if (!powers.empty()) {
        Int largest = small_primes().back();
        Int cap;
        try {
            cap = ipow(largest, n);
        } catch (const size_error&) {
            cap = X + 1;
        }
        if (cap <= X) throw size_error("count_exact: X exceeds the sieve prime table");
    }

    Int seg_len = std::min<Int>(X, std::max<Int>(Int(1) << 16, memory_budget_bytes()));
    std::vector<std::uint8_t> free_flags;
    Int targets[2] = {r, mod_canonical(-r, q)};

    Int total = 0;
    for (Int lo = 1; lo <= X; lo += seg_len) {
        Int hi = std::min<Int>(X, lo + seg_len - 1);
        free_flags.assign(hi - lo + 1, 1);
        for (Int pn : powers) {
            Int first = ((lo + pn - 1) / pn) * pn;
            for (Int m = first; m <= hi; m += pn) free_flags[m - lo] = 0;
        }
        for (Int t : targets) {
            Int first = lo + mod_canonical(t - lo, q);
            for (Int b = first; b <= hi; b += q) total += free_flags[b - lo];
        }
    }
    return total;
}

double zeta_value(int n) {
    if (n < 2) throw std::domain_error("zeta_value: need n >= 2");
    const double pi = 3.14159265358979323846;
    switch (n) {
        case 2: return pi * pi / 6.0;
        case 4: return std::pow(pi, 4) / 90.0;
        case 6: return std::pow(pi, 6) / 945.0;
        case 8: return std::pow(pi, 8) / 9450.0;
        default: break;
    }
    // Euler product; tail beyond the prime table is below 1e-12 for n >= 3.
    long double inv = 1.0L;
    for (Int p : small_primes()) inv *= (1.0L - std::pow(static_cast<long double>(p), -n));
    return static_cast<double>(1.0L / inv);
}

double main_term(Int X, Int q, Int r, int n) {
    r = mod_canonical(r, q);
    check_progression_args(X, q, r, n);
    long double term = 2.0L * X / q / zeta_value(n);
    for (const auto& [p, alpha] : factorize(q).factors) {
        long double pn = std::pow(static_cast<long double>(p), n);
        term /= (1.0L - 1.0L / pn);
        if (r % ipow(p, alpha) == 0)
            term *= (1.0L - std::pow(static_cast<long double>(p), alpha - n));
    }
    return static_cast<double>(term);
}

CountReport count_report(Int X, Int q, Int r, int n) {
    CountReport rep{X, q, mod_canonical(r, q), n, 0, 0.0, 0.0, admissibility(r, q, n)};
    rep.exact = count_exact(X, q, rep.r, n);
    rep.main = main_term(X, q, rep.r, n);
    rep.relative_error = rep.main == 0.0 ? 0.0 : std::abs(rep.exact - rep.main) / std::abs(rep.main);
    return rep;
}

namespace {

// Residues mod M(n) with v_p <= 1 for every p | n; offenders otherwise.
std::vector<Int> density_offenders(int n, const std::vector<Int>& R) {
    Int M = modulus_M(n);
    std::vector<Int> bad;
    for (Int r : R) {
        if (r < 0 || r >= M) {
            bad.push_back(r);
            continue;
        }
        for (const auto& [p, e] : factorize(n).factors)
            if (r % (p * p) == 0) {
                bad.push_back(r);
                break;
            }
    }
    return bad;
}

void require_admissible(int n, const std::vector<Int>& R) {
    std::vector<Int> bad = density_offenders(n, R);
    if (bad.empty()) return;
    std::ostringstream os;
    os << "density_shape_classes: classes with v_p >= 2 at some p | n:";
    for (Int r : bad) os << ' ' << r;
    throw std::domain_error(os.str());
}

}  // namespace

double density_shape_classes(int n, const std::vector<Int>& R) {
    if (n < 2) throw std::domain_error("density_shape_classes: need n >= 2");
    require_admissible(n, R);
    std::set<Int> classes(R.begin(), R.end());
    long double d = static_cast<long double>(classes.size()) / modulus_M(n) / zeta_value(n);
    for (const auto& [p, e] : factorize(n).factors)
        d /= (1.0L - std::pow(static_cast<long double>(p), -n));
    return static_cast<double>(d);
}

std::optional<std::string> density_symbolic(int n, const std::vector<Int>& R) {
    // 1/zeta(n) = c_n / pi^n for even n <= 8.
    Int zeta_inverse_scale;
    switch (n) {
        case 2: zeta_inverse_scale = 6; break;
        case 4: zeta_inverse_scale = 90; break;
        case 6: zeta_inverse_scale = 945; break;
        case 8: zeta_inverse_scale = 9450; break;
        default: return std::nullopt;
    }
    require_admissible(n, R);
    std::set<Int> classes(R.begin(), R.end());
    namespace bm = boost::multiprecision;
    bm::cpp_rational c(static_cast<long long>(classes.size()), static_cast<long long>(modulus_M(n)));
    c *= zeta_inverse_scale;
    for (const auto& [p, e] : factorize(n).factors) {
        Int pn = ipow(p, n);
        c *= bm::cpp_rational(pn, pn - 1);
    }
    std::ostringstream os;
    if (bm::denominator(c) == 1)
        os << bm::numerator(c) << "/pi^" << n;
    else
        os << bm::numerator(c) << "/(" << bm::denominator(c) << "*pi^" << n << ")";
    return os.str();
}

std::map<std::vector<std::vector<int>>, std::vector<Int>> shape_class_partition(int n) {
    if (n < 3) throw std::domain_error("shape_class_partition: need n >= 3");
    ShapeTable table = build_table(n);
    std::map<std::vector<std::vector<int>>, std::vector<Int>> out;
    for (Int r = 0; r < table.M; ++r) {
        if (!density_offenders(n, {r}).empty()) continue;
        const TableEntry& entry = table.entries.at(r);
        if (entry.status != TableStatus::Shape)
            throw std::logic_error("shape_class_partition: admissible class without a shape entry");
        out[k_pattern(entry.shape)].push_back(r);
    }
    return out;
}

std::vector<RpCount> rp_distribution_exact(Int p, int e) {
    if (p == 2 || !is_prime_u64(p)) throw std::domain_error("rp_distribution_exact: p must be an odd prime");
    if (e < 1) throw std::domain_error("rp_distribution_exact: need e >= 1");
    Int P = ipow(p, e + 1);
    if (P > kEnumerationBudget) throw size_error("rp_distribution_exact: p^(e+1) exceeds the enumeration budget");

    std::vector<Int> counts(e + 2, 0);
    for (Int u = 1; u < P; ++u) {
        if (u % p == 0) continue;
        Int t = powmod_u64(u, p - 1, P);
        int v = t == 1 ? e + 1 : vp(t - 1, p);
        for (int k = 1; k <= std::min(v, e + 1); ++k) ++counts[k];
    }
    std::vector<RpCount> out;
    for (int k = 1; k <= e + 1; ++k) {
        if (counts[k] != (p - 1) * ipow(p, e - (k - 1)))
            throw std::logic_error("rp_distribution_exact: counts deviate from (p-1)p^(e-k+1)");
        out.push_back({k, counts[k]});
    }
    return out;
}

WieferichSplit wieferich_split(Int p, int e) {
    if (e < 1) throw std::domain_error("wieferich_split: need e >= 1");
    if (p == 2) {
        // Enumerate units mod 2^{e+1}: r_2(u) = v_2(u - 1) - 1, with u = 1
        // hitting the precision cap (treated as r >= 1).
        Int P = ipow(2, e + 1);
        Int r0 = 0, rge1 = 0;
        for (Int u = 1; u < P; u += 2) {
            if (u == 1 || (u - 1) % 4 == 0)
                ++rge1;
            else
                ++r0;
        }
        Int g = std::gcd(r0, r0 + rge1);
        Int g2 = std::gcd(rge1, r0 + rge1);
        return {r0 / g, (r0 + rge1) / g, rge1 / g2, (r0 + rge1) / g2};
    }
    if (!is_prime_u64(p)) throw std::domain_error("wieferich_split: p must be prime");
    if (ipow(p, e + 1) <= kEnumerationBudget) {
        std::vector<RpCount> dist = rp_distribution_exact(p, e);
        // v >= 2 corresponds to r_p >= 1; proportions must be 1/p and 1 - 1/p.
        if (dist[1].count * p != dist[0].count)
            throw std::logic_error("wieferich_split: enumeration disagrees with the 1/p law");
    }
    return {p - 1, p, 1, p};
}

}  // namespace pureshape
