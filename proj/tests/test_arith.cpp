#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "pureshape/arith.hpp"
#include "pureshape/errors.hpp"

using namespace pureshape;
using BigInt = boost::multiprecision::cpp_int;

namespace {

BigInt binom_exact(int n, int i) {
    BigInt b = 1;
    for (int j = 1; j <= i; ++j) b = b * (n - j + 1) / j;
    return b;
}

int vp_exact(BigInt x, Int p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("factorize basics") {
    auto f = factorize(360);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Int, int>{2, 3});
    CHECK(f.factors[1] == std::pair<Int, int>{3, 2});
    CHECK(f.factors[2] == std::pair<Int, int>{5, 1});

    auto g = factorize(-17);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == std::pair<Int, int>{17, 1});

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(-1).sign == -1);
}

TEST_CASE("factorize round-trips on random 48-bit values") {
    std::mt19937_64 rng(20260817);
    for (int iter = 0; iter < 200; ++iter) {
        Int x = static_cast<Int>(rng() % ((Int{1} << 48) - 2)) + 2;
        auto f = factorize(x);
        Int back = f.sign;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime_u64(p));
            for (int j = 0; j < e; ++j) back *= p;
        }
        CHECK(back == x);
        for (std::size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
}

TEST_CASE("vp and radical") {
    CHECK(vp(48, 2) == 4);
    CHECK(vp(48, 3) == 1);
    CHECK(vp(-8, 2) == 3);
    CHECK(vp(7, 2) == 0);
    CHECK_THROWS_AS(vp(0, 2), std::domain_error);

    CHECK(radical(1) == 1);
    CHECK(radical(12) == 6);
    CHECK(radical(49) == 7);
    CHECK(radical(360) == 30);
}

TEST_CASE("modulus_M golden values") {
    CHECK(modulus_M(3) == 9);
    CHECK(modulus_M(4) == 8);
    CHECK(modulus_M(5) == 25);
    CHECK(modulus_M(6) == 36);
    CHECK(modulus_M(7) == 49);
    CHECK(modulus_M(8) == 16);
    CHECK(modulus_M(9) == 27);
    CHECK(modulus_M(12) == 72);
}

TEST_CASE("power-free predicate") {
    CHECK(is_nth_power_free(8, 4));
    CHECK_FALSE(is_nth_power_free(8, 3));
    CHECK_FALSE(is_nth_power_free(16, 4));
    CHECK(is_nth_power_free(-48, 5));
    CHECK(is_nth_power_free(1, 2));
    CHECK(is_nth_power_free(-1, 2));
}

TEST_CASE("squarefree decomposition") {
    // 360 = 2^3 * 3^2 * 5: a_1 = 5, a_2 = 3, a_3 = 2.
    auto d = squarefree_decomposition(360, 4);
    REQUIRE(d.part.size() == 3);
    CHECK(d.part[0] == 5);
    CHECK(d.part[1] == 3);
    CHECK(d.part[2] == 2);

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + static_cast<int>(rng() % 8);
        Int a = static_cast<Int>(rng() % 2000000) + 2;
        if (!is_nth_power_free(a, n)) continue;
        auto dec = squarefree_decomposition(a, n);
        Int back = 1;
        for (std::size_t j = 0; j < dec.part.size(); ++j) {
            auto f = factorize(dec.part[j]);
            for (auto [p, e] : f.factors) CHECK(e == 1);  // squarefree parts
            back *= ipow(dec.part[j], static_cast<int>(j) + 1);
        }
        CHECK(back == a);
        for (std::size_t i = 0; i < dec.part.size(); ++i)
            for (std::size_t j = i + 1; j < dec.part.size(); ++j)
                CHECK(std::gcd(dec.part[i], dec.part[j]) == 1);
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    // sum_{d | 60} mu(d) = 0
    int sum = 0;
    for (Int d = 1; d <= 60; ++d)
        if (60 % d == 0) sum += mobius(d);
    CHECK(sum == 0);
}

TEST_CASE("binomial valuations match exact binomials") {
    CHECK(kummer_binomial_valuation(4, 1, 2) == 2);
    CHECK(kummer_binomial_valuation(4, 2, 2) == 1);
    CHECK(kummer_binomial_valuation(9, 3, 3) == 1);
    for (int n = 1; n <= 40; ++n)
        for (int i = 0; i <= n; ++i)
            for (Int p : {Int{2}, Int{3}, Int{5}, Int{7}})
                CHECK(kummer_binomial_valuation(n, i, p) == vp_exact(binom_exact(n, i), p));
}

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));               // Carmichael
    CHECK(is_prime_u64(1000000007ULL));
    CHECK(is_prime_u64((1ULL << 61) - 1));        // Mersenne prime
    CHECK_FALSE(is_prime_u64((1ULL << 61) + 1));  // 3 * ...
    const auto& primes = small_primes();
    REQUIRE(primes.size() > 100);
    CHECK(primes[0] == 2);
    CHECK(primes[1] == 3);
    CHECK(primes[24] == 97);
}

TEST_CASE("modular helpers") {
    CHECK(mod_canonical(-3, 8) == 5);
    CHECK(mod_canonical(17, 8) == 1);
    CHECK(mod_canonical(0, 8) == 0);

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        std::uint64_t m = rng() % 1000000007ULL + 2;
        std::uint64_t a = rng() % m, b = rng() % m, e = rng() % 1000;
        CHECK(mulmod_u64(a, b, m) ==
              static_cast<std::uint64_t>(BigInt(a) * b % m));
        CHECK(powmod_u64(a, e, m) ==
              static_cast<std::uint64_t>(boost::multiprecision::powm(BigInt(a), e, BigInt(m))));
    }
}

TEST_CASE("ipow overflow guard") {
    CHECK(ipow(2, 62) == (Int{1} << 62));
    CHECK(ipow(10, 18) == 1000000000000000000LL);
    CHECK_THROWS_AS(ipow(10, 19), size_error);
    CHECK_THROWS_AS(ipow(3, 64), size_error);
}
