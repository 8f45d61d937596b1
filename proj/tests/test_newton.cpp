#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "pureshape/errors.hpp"
#include "pureshape/newton.hpp"
#include "pureshape/shape.hpp"

using namespace pureshape;

namespace {

// Gift-wrapping reference: walk from the leftmost-lowest point, always taking
// the smallest slope and merging collinear runs by taking the farthest point.
std::vector<HullPoint> hull_reference(std::vector<HullPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Keep only the lowest point in each column.
    std::vector<HullPoint> cols;
    for (const auto& pt : pts)
        if (!cols.empty() && cols.back().x == pt.x) continue;
        else cols.push_back(pt);
    if (cols.size() <= 1) return cols;

    std::vector<HullPoint> hull{cols.front()};
    std::size_t at = 0;
    while (at + 1 < cols.size()) {
        std::size_t best = at + 1;
        for (std::size_t j = at + 2; j < cols.size(); ++j) {
            // slope(at, j) <= slope(at, best)? compare cross-multiplied.
            Int lhs = (cols[j].y - cols[at].y) * (cols[best].x - cols[at].x);
            Int rhs = (cols[best].y - cols[at].y) * (cols[j].x - cols[at].x);
            if (lhs < rhs || (lhs == rhs && cols[j].x > cols[best].x)) best = j;
        }
        hull.push_back(cols[best]);
        at = best;
    }
    return hull;
}

}  // namespace

TEST_CASE("nth roots mod p") {
    CHECK(nth_root_mod_p(17, 4, 2) == 1);
    CHECK(nth_root_mod_p(2, 2, 7) == 3);
    CHECK(nth_root_mod_p(1, 6, 7) == 1);
    CHECK(nth_root_mod_p(6, 3, 7) == 3);     // 3^3 = 27 = 6 mod 7
    CHECK_FALSE(nth_root_mod_p(3, 10, 5).has_value());
    CHECK_FALSE(nth_root_mod_p(6, 6, 7).has_value());  // x^6 = 1 for every unit
}

TEST_CASE("phi expansion valuations") {
    PhiExpansion ex = phi_expansion(17, 4, 2);
    CHECK_FALSE(ex.ramified);
    CHECK(ex.u == 1);
    REQUIRE(ex.coeff.size() == 5);
    CHECK(ex.coeff[0] == -16);
    CHECK(ex.coeff[1] == 4);
    CHECK(ex.coeff[2] == 6);
    CHECK(ex.coeff[3] == 4);
    CHECK(ex.coeff[4] == 1);

    PhiExpansion ram = phi_expansion(6, 6, 3);
    CHECK(ram.ramified);
    CHECK(ram.coeff[0] == -6);
    CHECK(ram.coeff[6] == 1);
    for (int i = 1; i < 6; ++i) CHECK(ram.coeff[i] == 0);
}

TEST_CASE("lower hull merges collinear points") {
    // The four points admit a single side of slope -1/2 through (0,2) and
    // (4,0); both middle points sit on or above it, (2,1) exactly on it.
    std::vector<HullPoint> pts{{0, 2}, {1, 2}, {2, 1}, {4, 0}};
    auto verts = lower_hull_vertices(pts);
    REQUIRE(verts.size() == 2);
    CHECK(verts[0] == HullPoint{0, 2});
    CHECK(verts[1] == HullPoint{4, 0});
    auto sides = lower_hull(pts);
    REQUIRE(sides.size() == 1);
    CHECK(sides[0].slope_num == -1);
    CHECK(sides[0].slope_den == 2);

    // Without (0,2) the hull breaks at (2,1).
    std::vector<HullPoint> pts2{{1, 2}, {2, 1}, {4, 0}};
    auto sides2 = lower_hull(pts2);
    REQUIRE(sides2.size() == 2);
    CHECK(sides2[0].from == HullPoint{1, 2});
    CHECK(sides2[0].to == HullPoint{2, 1});
    CHECK(sides2[1].from == HullPoint{2, 1});
    CHECK(sides2[1].to == HullPoint{4, 0});
    CHECK(sides2[1].slope_num == -1);
    CHECK(sides2[1].slope_den == 2);
}

TEST_CASE("lower hull agrees with gift-wrapping on random sets") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 500; ++iter) {
        int count = 2 + static_cast<int>(rng() % 12);
        std::vector<HullPoint> pts;
        for (int i = 0; i < count; ++i)
            pts.push_back({static_cast<Int>(rng() % 20), static_cast<Int>(rng() % 12)});
        std::set<std::pair<Int, Int>> seen;
        std::vector<HullPoint> dedup;
        for (const auto& pt : pts)
            if (seen.insert({pt.x, pt.y}).second) dedup.push_back(pt);
        if (dedup.size() < 2) continue;
        auto got = lower_hull_vertices(dedup);
        auto want = hull_reference(dedup);
        CHECK(got == want);
    }
}

TEST_CASE("order 1 analysis of x^4 - 17 at 2") {
    Order1Report rep = order1_analysis(17, 4, 2);
    REQUIRE(rep.principal.size() == 3);
    CHECK(rep.principal[0].from == HullPoint{0, 4});
    CHECK(rep.principal[0].to == HullPoint{1, 2});
    CHECK(rep.principal[1].to == HullPoint{2, 1});
    CHECK(rep.principal[2].to == HullPoint{4, 0});
    // All residuals separable, yet three lattice points sit under the polygon.
    CHECK(rep.residuals_separable);
    CHECK(rep.nonseparable.empty());
    CHECK(rep.index_bound == 3);
    CHECK_FALSE(rep.certifies_zero_index());
    CHECK(rep.residuals[2].coeffs == std::vector<Int>{1, 1});
}

TEST_CASE("order 1 analysis of Eisenstein-type expansions") {
    Order1Report eis = order1_analysis(2, 4, 2);
    REQUIRE(eis.principal.size() == 1);
    CHECK(eis.principal[0].from == HullPoint{0, 1});
    CHECK(eis.principal[0].to == HullPoint{4, 0});
    CHECK(eis.index_bound == 0);
    CHECK(eis.certifies_zero_index());

    // a = 8: single side (0,3) -> (4,0) with three points below it.
    Order1Report r8 = order1_analysis(8, 4, 2);
    REQUIRE(r8.principal.size() == 1);
    CHECK(r8.principal[0].from == HullPoint{0, 3});
    CHECK(r8.index_bound == 3);
    CHECK_FALSE(r8.certifies_zero_index());
    CHECK(r8.residuals_separable);
}

TEST_CASE("residual digits along a chosen side") {
    PhiExpansion ex = phi_expansion(17, 4, 2);
    auto sides = lower_hull(expansion_points(ex));
    ResidualPolynomial last = residual_polynomial(ex, sides.back());
    // side (2,1) -> (4,0): c_0 = 6/2 mod 2 = 1, c_1 = 1 mod 2 = 1.
    CHECK(last.coeffs == std::vector<Int>{1, 1});
    ResidualPolynomial first = residual_polynomial(ex, sides.front());
    CHECK(first.coeffs == std::vector<Int>{1, 1});  // -16/16 mod 2, 4/4 mod 2
}

TEST_CASE("separability over F_p") {
    CHECK(separable_mod_p({1, 1}, 2));
    CHECK(separable_mod_p({1, 0, 1}, 3));       // x^2 + 1 over F_3
    CHECK_FALSE(separable_mod_p({1, 0, 1}, 2)); // (x+1)^2 over F_2
    CHECK_FALSE(separable_mod_p({0, 0, 1}, 3)); // x^2
    CHECK(separable_mod_p({2, 1}, 5));
    CHECK(separable_mod_p({1}, 2));             // constants are vacuously separable
}

TEST_CASE("polygon index bound counts lattice points") {
    auto one = lower_hull({{0, 1}, {6, 0}});
    CHECK(polygon_index_bound(one) == 0);
    auto steep = lower_hull({{0, 3}, {4, 0}});
    CHECK(polygon_index_bound(steep) == 3);     // (1,1),(1,2),(2,1)
    auto two = lower_hull({{0, 4}, {1, 2}, {2, 1}, {4, 0}});
    CHECK(polygon_index_bound(two) == 3);       // (1,1),(1,2),(2,1) again
}

TEST_CASE("zero index certificate equals d_p = 0 on unit classes") {
    for (int n : {6, 10, 15}) {
        for (auto [p, e] : factorize(n).factors) {
            if (e != 1) continue;
            int checked = 0;
            for (Int a = -800; a <= 800; ++a) {
                if (a == 0 || a % p == 0) continue;
                if (!hypothesis_H(a, n)) continue;
                if (!nth_root_mod_p(mod_canonical(a, p), n, p)) continue;
                CHECK(order1_zero_index(a, n, p) == (d_p(a, p, e) == 0));
                ++checked;
            }
            CHECK(checked > 100);
        }
    }
}

TEST_CASE("no linear branch raises unsupported") {
    CHECK_THROWS_AS(order1_zero_index(7, 10, 5), unsupported_error);
    CHECK_THROWS_AS(order1_analysis(3, 10, 5), unsupported_error);
}

TEST_CASE("one more digit verification") {
    for (auto [n, p] : std::vector<std::pair<int, Int>>{{4, 2}, {6, 3}, {9, 3}, {2, 2}, {10, 5}}) {
        DigitReport rep = verify_one_more_digit(n, p);
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
        CHECK(rep.classes_checked > 0);
    }
    CHECK_THROWS_AS(verify_one_more_digit(4, 3), std::domain_error);
}

TEST_CASE("kummer lattice verification") {
    for (auto [n, p] : std::vector<std::pair<int, Int>>{{4, 2}, {8, 2}, {9, 3}, {12, 2}, {12, 3}}) {
        KummerReport rep = verify_kummer_lattice(n, p);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
    }
    KummerReport vac = verify_kummer_lattice(15, 2);
    CHECK(vac.vacuous);
    CHECK(vac.pass);
}
