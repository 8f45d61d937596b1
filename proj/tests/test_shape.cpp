#include "doctest.h"

#include <random>
#include <stdexcept>

#include "pureshape/errors.hpp"
#include "pureshape/shape.hpp"

using namespace pureshape;

TEST_CASE("hypothesis") {
    CHECK(hypothesis_H(17, 4));
    CHECK(hypothesis_H(8, 4));    // v_2 = 3, 2 does not divide 3
    CHECK(hypothesis_H(-5, 4));
    CHECK(hypothesis_H(72, 6));   // 2^3 * 3^2
    CHECK(hypothesis_H(9, 3));          // v_3 = 2 and 3 does not divide 2
    CHECK_FALSE(hypothesis_H(4, 4));    // v_2 = 2
    CHECK_FALSE(hypothesis_H(16, 4));   // not power-free
    CHECK_FALSE(hypothesis_H(27, 3));   // not cube-free
    CHECK_THROWS_AS(hypothesis_H(0, 4), std::domain_error);

    auto v = hypothesis_violation(4, 4);
    REQUIRE(v.has_value());
    CHECK(v->p == 2);
}

TEST_CASE("r_p golden values") {
    CHECK(r_p(17, 2).value == 3);     // v_2(16) - 1
    CHECK(r_p(5, 2).value == 1);
    CHECK(r_p(3, 2).value == 0);
    CHECK(r_p(10, 3).value == 1);     // v_3(99) - 1
    CHECK(r_p(7, 5).value == 1);      // 7^4 = 2401 = 1 + 2400, v_5 = 2
    CHECK(r_p(3, 5).value == 0);      // 3^4 = 81 = 1 + 80, v_5 = 1
    CHECK(r_p(10, 5).value == -1);    // ramified
    CHECK(r_p(26, 3).value == 2);     // v_3(675) - 1
    CHECK(r_p(8, 3).value == 1);      // v_3(63) - 1
    CHECK_FALSE(r_p(17, 2).at_precision_cap);
}

TEST_CASE("r_p precision cap") {
    auto capped = r_p(33, 2, 4);      // 33 = 1 mod 2^4: 33^1 - 1 = 32, v >= 4
    CHECK(capped.value == 3);
    CHECK(capped.at_precision_cap);
    auto exact = r_p(33, 2, 8);
    CHECK(exact.value == 4);
    CHECK_FALSE(exact.at_precision_cap);
    auto one = r_p(1, 2);             // a = 1: the valuation exceeds any cap
    CHECK(one.at_precision_cap);
}

TEST_CASE("d_p clamp") {
    CHECK(d_p(17, 2, 2) == 2);
    CHECK(d_p(17, 2, 1) == 1);
    CHECK(d_p(5, 2, 2) == 1);
    CHECK(d_p(3, 2, 2) == 0);
    CHECK(d_p(8, 2, 2) == 0);         // ramified: clamped to 0
}

TEST_CASE("k sequences") {
    // n = 4, p = 2: thresholds m >= 4 - 4/2^k, i.e. m >= 2 (k=1), m >= 3 (k=2).
    CHECK(k_pm(4, 2, 2, 1) == 0);
    CHECK(k_pm(4, 2, 2, 2) == 1);
    CHECK(k_pm(4, 2, 2, 3) == 2);
    CHECK(k_pm(4, 2, 1, 3) == 1);
    CHECK(k_pm(4, 2, 0, 3) == 0);
    // n = 9, p = 3: m >= 6 (k=1), m >= 8 (k=2).
    CHECK(k_pm(9, 3, 2, 5) == 0);
    CHECK(k_pm(9, 3, 2, 6) == 1);
    CHECK(k_pm(9, 3, 2, 7) == 1);
    CHECK(k_pm(9, 3, 2, 8) == 2);
    CHECK(k_pm(9, 3, 1, 8) == 1);
}

TEST_CASE("C_m factors") {
    CHECK(C_m(17, 4, 3) == 1);        // squarefree a
    // 72 = 2^3 * 3^2: C_m = 3^floor(m/3) * 2^floor(m/2)
    CHECK(C_m(72, 6, 1) == 1);
    CHECK(C_m(72, 6, 2) == 2);
    CHECK(C_m(72, 6, 3) == 6);
    CHECK(C_m(72, 6, 4) == 12);
    CHECK(C_m(72, 6, 5) == 12);
    CHECK(C_m(-72, 6, 3) == 6);       // sign plays no role
    CHECK(C_m(8, 4, 3) == 4);         // 2^floor(9/4)
}

TEST_CASE("local shape golden quartic") {
    LocalShape s17 = local_shape(17, 4, 2);
    CHECK(s17.p == 2);
    CHECK(s17.e == 2);
    CHECK(s17.v_a == 0);
    CHECK(s17.d == 2);
    CHECK(s17.k == std::vector<int>{0, 1, 2});
    REQUIRE(s17.beta.has_value());
    CHECK((*s17.beta)[1].m == 2);
    CHECK((*s17.beta)[1].modulus == 2);
    CHECK((*s17.beta)[1].coeffs == std::vector<Int>{1, 0});
    CHECK((*s17.beta)[2].modulus == 4);
    CHECK((*s17.beta)[2].coeffs == std::vector<Int>{1, 1, 1});

    LocalShape s5 = local_shape(5, 4, 2);
    CHECK(s5.d == 1);
    CHECK(s5.k == std::vector<int>{0, 1, 1});

    LocalShape s3 = local_shape(3, 4, 2);
    CHECK(s3.d == 0);
    CHECK(s3.k == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(local_shape(4, 4, 2), std::domain_error);
}

TEST_CASE("global shape golden sextic") {
    GlobalShape g = global_shape(73, 6);
    REQUIRE(g.locals.size() == 2);
    CHECK(g.locals[0].p == 2);
    CHECK(g.locals[0].d == 1);
    CHECK(g.locals[0].k == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(g.locals[1].p == 3);
    CHECK(g.locals[1].d == 1);
    CHECK(g.locals[1].k == std::vector<int>{0, 0, 0, 1, 1});
}

TEST_CASE("beta fixtures") {
    CHECK(beta_fixture_available(4, 2));
    CHECK(beta_fixture_available(6, 2));
    CHECK(beta_fixture_available(6, 3));
    CHECK_FALSE(beta_fixture_available(9, 3));
    CHECK_THROWS_AS(beta_fixture(9, 3, 1), unsupported_error);

    auto b = beta_fixture(4, 2, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[2].coeffs == std::vector<Int>{1, 1, 1});
}

TEST_CASE("shape equality ignores the exact r and v") {
    // 17 and 97 are both 1 mod 8 with different r_2 (3 vs 4).
    CHECK(r_p(97, 2).value == 4);
    CHECK(shape_equal(local_shape(17, 4, 2), local_shape(97, 4, 2)));
    // 2 and 8 are both ramified at 2 with v = 1 vs 3.
    CHECK(shape_equal(local_shape(2, 4, 2), local_shape(8, 4, 2)));
    // unit vs ramified differ
    CHECK_FALSE(shape_equal(local_shape(3, 4, 2), local_shape(2, 4, 2)));
    // d differs
    CHECK_FALSE(shape_equal(local_shape(17, 4, 2), local_shape(5, 4, 2)));
    // beta differs: 1 vs 8 mod 9 for n = 6
    CHECK_FALSE(shape_equal(local_shape(73, 6, 3), local_shape(17, 6, 3)));
    CHECK(shape_equal(global_shape(73, 6), global_shape(73 + 36, 6)));
}

TEST_CASE("basis description golden") {
    auto b17 = basis_description(17, 4);
    REQUIRE(b17.size() == 4);
    CHECK(b17[0].denom == 1);
    CHECK(b17[1].denom == 1);
    CHECK(b17[2].denom == 2);
    CHECK(b17[3].denom == 4);
    CHECK(render_basis_element(b17[2]) == "(theta^2 + 1)/2");
    CHECK(render_basis_element(b17[3]) == "(theta^3 + theta^2 + theta + 1)/4");

    auto b73 = basis_description(73, 6);
    REQUIRE(b73.size() == 6);
    CHECK(b73[3].denom == 2);
    CHECK(b73[4].denom == 6);
    CHECK(b73[5].denom == 6);
    CHECK(render_basis_element(b73[4]) == "(theta^4 + 4*theta^2 + 3*theta + 4)/6");

    // Ramified: no p-part, but C_m denominators.
    auto b8 = basis_description(8, 4);
    CHECK(b8[3].p_part == 1);
    CHECK(b8[3].c == 4);
    CHECK(b8[3].denom == 4);
}

TEST_CASE("k pattern extraction") {
    auto kp = k_pattern(global_shape(73, 6));
    REQUIRE(kp.size() == 2);
    CHECK(kp[0] == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(kp[1] == std::vector<int>{0, 0, 0, 1, 1});
}

TEST_CASE("shape is invariant under a -> a + M") {
    std::mt19937_64 rng(20260817);
    for (int n : {4, 6, 9, 12}) {
        Int M = modulus_M(n);
        int done = 0;
        while (done < 60) {
            Int a = static_cast<Int>(rng() % 100000) + 2;
            if (rng() % 2) a = -a;
            if (!hypothesis_H(a, n) || !hypothesis_H(a + M, n)) continue;
            CHECK(shape_equal(global_shape(a, n), global_shape(a + M, n)));
            ++done;
        }
    }
}

TEST_CASE("k values are monotone and bounded by d") {
    std::mt19937_64 rng(5);
    for (int n : {4, 6, 8, 9, 10, 12, 18}) {
        int done = 0;
        while (done < 40) {
            Int a = static_cast<Int>(rng() % 50000) + 2;
            if (!hypothesis_H(a, n)) continue;
            for (const auto& ls : global_shape(a, n).locals) {
                int prev = 0;
                for (int k : ls.k) {
                    CHECK(k >= prev);
                    CHECK(k <= ls.d);
                    prev = k;
                }
            }
            ++done;
        }
    }
}
