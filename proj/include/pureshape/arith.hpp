#ifndef PURESHAPE_ARITH_HPP_
#define PURESHAPE_ARITH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace pureshape {

using Int = std::int64_t;

struct FactoredInteger {
    Int value;                               // nonzero original value
    int sign;                                // +1 or -1
    std::vector<std::pair<Int, int>> factors;  // (prime, exponent), primes ascending
};

// Writes a = sign * prod a_j^j with a_j squarefree and pairwise coprime;
// a_j collects the primes q with v_q(a) = j.  Defined for n-th-power-free a,
// so only j = 1..n-1 occur.
struct SquarefreeDecomposition {
    Int a;
    int n;
    std::vector<Int> part;                   // part[j-1] = a_j
};

// Deterministic trial division (prime sieve, then odd candidates), with a
// Miller-Rabin shortcut once the remaining cofactor is prime.
FactoredInteger factorize(Int x);

int vp(Int x, Int p);                        // v_p(x); x = 0 is a domain error
Int radical(Int n);                          // prod of distinct primes of n >= 1
Int modulus_M(int n);                        // n * rad(n) = prod_{p^e || n} p^{e+1}; n >= 3
bool is_nth_power_free(Int a, int n);
SquarefreeDecomposition squarefree_decomposition(Int a, int n);
int mobius(Int d);                           // d >= 1

// v_p(binom(n, i)) = number of carries when adding i and n-i in base p.
int kummer_binomial_valuation(Int n, Int i, Int p);

// Shared plumbing.
const std::vector<Int>& small_primes();      // sieve primes used by factorize
bool is_prime_u64(std::uint64_t x);          // deterministic for 64-bit range
Int mod_canonical(Int a, Int m);             // representative in [0, m)
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);
Int ipow(Int b, int e);                      // overflow is a size error

}  // namespace pureshape

#endif  // PURESHAPE_ARITH_HPP_
