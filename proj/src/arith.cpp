#include "pureshape/arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pureshape/errors.hpp"

namespace pureshape {

namespace {

constexpr Int kSieveBound = 1 << 20;

std::vector<Int> build_sieve_primes() {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<Int> primes;
    for (Int i = 2; i <= kSieveBound; ++i) {
        if (!composite[i]) primes.push_back(i);
        for (Int p : primes) {
            if (p * i > kSieveBound) break;
            composite[p * i] = true;
            if (i % p == 0) break;
        }
    }
    return primes;
}

}  // namespace

const std::vector<Int>& small_primes() {
    static const std::vector<Int> primes = build_sieve_primes();
    return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Sufficient deterministic base set for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t y = powmod_u64(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            y = mulmod_u64(y, y, x);
            if (y == x - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FactoredInteger factorize(Int x) {
    if (x == 0) throw std::domain_error("factorize: 0 has no factorization");
    if (x == std::numeric_limits<Int>::min())
        throw size_error("factorize: magnitude exceeds the configured 2^63 bound");
    FactoredInteger out;
    out.value = x;
    out.sign = x < 0 ? -1 : 1;
    std::uint64_t m = static_cast<std::uint64_t>(x < 0 ? -x : x);
    for (Int p : small_primes()) {
        if (static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) > m) break;
        if (m % static_cast<std::uint64_t>(p) == 0) {
            int e = 0;
            while (m % static_cast<std::uint64_t>(p) == 0) m /= static_cast<std::uint64_t>(p), ++e;
            out.factors.emplace_back(p, e);
            if (is_prime_u64(m)) break;
        }
    }
    if (m > 1 && !is_prime_u64(m)) {
        // Cofactor is composite with all prime factors above the sieve bound.
        std::uint64_t c = kSieveBound | 1;
        while (c * c <= m) {
            if (m % c == 0) {
                int e = 0;
                while (m % c == 0) m /= c, ++e;
                out.factors.emplace_back(static_cast<Int>(c), e);
                if (is_prime_u64(m)) break;
            }
            c += 2;
        }
    }
    if (m > 1) out.factors.emplace_back(static_cast<Int>(m), 1);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

int vp(Int x, Int p) {
    if (x == 0) throw std::domain_error("vp: valuation of 0 is undefined");
    if (p < 2) throw std::domain_error("vp: p must be a prime >= 2");
    std::uint64_t m = static_cast<std::uint64_t>(x < 0 ? -x : x);
    int v = 0;
    while (m % static_cast<std::uint64_t>(p) == 0) m /= static_cast<std::uint64_t>(p), ++v;
    return v;
}

Int radical(Int n) {
    if (n < 1) throw std::domain_error("radical: argument must be positive");
    if (n == 1) return 1;
    Int r = 1;
    for (auto& [p, e] : factorize(n).factors) r *= p;
    return r;
}

Int modulus_M(int n) {
    if (n < 3) throw std::domain_error("modulus_M: degree must be at least 3");
    return static_cast<Int>(n) * radical(n);
}

bool is_nth_power_free(Int a, int n) {
    if (a == 0) throw std::domain_error("is_nth_power_free: a must be nonzero");
    if (n < 2) throw std::domain_error("is_nth_power_free: n must be at least 2");
    for (auto& [p, e] : factorize(a).factors)
        if (e >= n) return false;
    return true;
}

SquarefreeDecomposition squarefreedecomposition_impl(const FactoredInteger& f, int n) {
    SquarefreeDecomposition out;
    out.a = f.value;
    out.n = n;
    out.part.assign(static_cast<std::size_t>(n - 1), 1);
    for (auto& [p, e] : f.factors) {
        if (e >= n) throw std::domain_error("squarefree_decomposition: a is not n-th-power-free");
        out.part[static_cast<std::size_t>(e - 1)] *= p;
    }
    return out;
}

SquarefreeDecomposition squarefree_decomposition(Int a, int n) {
    if (a == 0) throw std::domain_error("squarefree_decomposition: a must be nonzero");
    if (n < 2) throw std::domain_error("squarefree_decomposition: n must be at least 2");
    return squarefreedecomposition_impl(factorize(a), n);
}

int mobius(Int d) {
    if (d < 1) throw std::domain_error("mobius: argument must be positive");
    if (d == 1) return 1;
    int count = 0;
    for (auto& [p, e] : factorize(d).factors) {
        if (e >= 2) return 0;
        ++count;
    }
    return (count % 2 == 0) ? 1 : -1;
}

int kummer_binomial_valuation(Int n, Int i, Int p) {
    if (p < 2) throw std::domain_error("kummer_binomial_valuation: p must be a prime >= 2");
    if (i < 0 || i > n) throw std::domain_error("kummer_binomial_valuation: need 0 <= i <= n");
    Int a = i, b = n - i;
    int carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        Int s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

Int mod_canonical(Int a, Int m) {
    if (m <= 0) throw std::domain_error("mod_canonical: modulus must be positive");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int ipow(Int b, int e) {
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    Int r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && std::numeric_limits<Int>::max() / (b < 0 ? -b : b) < (r < 0 ? -r : r))
            throw size_error("ipow: result exceeds 64-bit range");
        r *= b;
    }
    return r;
}

}  // namespace pureshape
