#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include "dp5/heights.hpp"
#include "dp5/io.hpp"
#include "dp5/torsor.hpp"

using namespace dp5;

namespace {

using T = std::array<std::int64_t, 10>;

CoxTuple cox(const T& a) { return CoxTuple::from_int64(a); }

const T kSample = {1, 1, 1, 1, 1, 3, 2, 2, 1, -1};

// The five equations written out by hand.
std::array<std::int64_t, 5> residual_oracle(const T& a) {
    auto [a1, a2, a3, a4, a12, a13, a14, a23, a24, a34] = a;
    return {a4 * a14 - a3 * a13 + a2 * a12, a4 * a24 - a3 * a23 + a1 * a12, a4 * a34 - a2 * a23 + a1 * a13,
            a3 * a34 - a2 * a24 + a1 * a14, a12 * a34 - a13 * a24 + a23 * a14};
}

ProjectivePoint pt(long a, long b, long c) { return ProjectivePoint::from_triple(a, b, c); }

bool off_lines(long a, long b, long c) { return a && b && c && a != b && a != c && b != c; }

}  // namespace

TEST_CASE("coprimality schema") {
    const auto& s = coprimality_schema();
    CHECK(s.size() == 30);
    std::set<std::pair<int, int>> pairs(s.begin(), s.end());
    CHECK(pairs.size() == 30);
    // disjoint index pairs are not constrained
    CHECK(pairs.count({4, 9}) == 0);
    CHECK(pairs.count({5, 8}) == 0);
    CHECK(pairs.count({6, 7}) == 0);
    CHECK(pairs.count({0, 1}) == 1);
    CHECK(pairs.count({0, 7}) == 1);
}

TEST_CASE("Pluecker residuals") {
    auto r = pluecker_residuals(cox(kSample));
    for (const auto& x : r) CHECK(x == 0);
    T ones;
    ones.fill(1);
    for (const auto& x : pluecker_residuals(cox(ones))) CHECK(x == 1);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> s(0, 1);
    for (int i = 0; i < 200; ++i) {
        std::array<int, 5> l;
        for (auto& x : l) x = s(rng) ? 1 : -1;
        auto b = apply_sign_action(cox(kSample), l);
        for (const auto& x : pluecker_residuals(b)) REQUIRE(x == 0);
        REQUIRE(blow_down(b) == blow_down(cox(kSample)));
    }

    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        T a;
        for (auto& x : a) x = d(rng);
        auto r2 = pluecker_residuals(cox(a));
        auto o = residual_oracle(a);
        for (int k = 0; k < 5; ++k) REQUIRE(r2[k] == o[k]);
    }
}

TEST_CASE("dependent coordinates") {
    auto d = dependent_coordinates(1, 1, 1, 1, 1, 2, -1);
    REQUIRE(d);
    CHECK(d->a13 == 3);
    CHECK(d->a14 == 2);
    CHECK(d->a24 == 1);

    auto z = dependent_coordinates(2, 1, 1, 1, 1, 1, 1);
    REQUIRE(z);
    CHECK(z->a13 == 0);

    // a4 a34 - a2 a23 = 1 is not divisible by a1 = 2
    CHECK_FALSE(dependent_coordinates(2, 1, 1, 1, 1, 1, 2));
    CHECK_THROWS_AS(dependent_coordinates(0, 1, 1, 1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(dependent_coordinates(2, 1, 1, 4, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("dependent coordinates against exhaustive solving") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> small(1, 4), mid(-6, 6);
    const std::int64_t W = 40;
    int solvable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::int64_t a1 = small(rng), a2 = small(rng), a3 = small(rng), a4 = small(rng);
        if (std::gcd(a1, a4) != 1) continue;
        std::int64_t a12 = mid(rng), a23 = mid(rng), a34 = mid(rng);
        std::optional<std::array<std::int64_t, 3>> found;
        int hits = 0;
        for (std::int64_t a13 = -W; a13 <= W; ++a13)
            for (std::int64_t a14 = -W; a14 <= W; ++a14)
                for (std::int64_t a24 = -W; a24 <= W; ++a24) {
                    auto r = residual_oracle({a1, a2, a3, a4, a12, a13, a14, a23, a24, a34});
                    if (r == std::array<std::int64_t, 5>{}) {
                        found = std::array<std::int64_t, 3>{a13, a14, a24};
                        ++hits;
                    }
                }
        auto d = dependent_coordinates(a1, a2, a3, a4, a12, a23, a34);
        REQUIRE(hits <= 1);
        if (d && (abs(d->a13) > W || abs(d->a14) > W || abs(d->a24) > W)) {
            // outside the search window
            REQUIRE_FALSE(found);
            continue;
        }
        REQUIRE(bool(d) == bool(found));
        if (d) {
            ++solvable;
            CHECK(d->a13 == (*found)[0]);
            CHECK(d->a14 == (*found)[1]);
            CHECK(d->a24 == (*found)[2]);
        }
    }
    CHECK(solvable > 10);
}

TEST_CASE("blow down") {
    CHECK(blow_down(cox(kSample)) == pt(2, 3, 1));
    T z = kSample;
    z[5] = 0;
    CHECK_THROWS_AS(blow_down(cox(z)), std::invalid_argument);
}

TEST_CASE("chart lift") {
    auto a = chart_lift(pt(2, 3, 1));
    CHECK(a == cox(kSample));
    auto b = chart_lift(pt(1, 2, 4));
    CHECK(b[0] == 2);
    CHECK(b[4] == 2);
    for (const auto& x : pluecker_residuals(b)) CHECK(x == 0);
    CHECK_THROWS_AS(chart_lift(pt(1, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(chart_lift(pt(0, 1, 2)), std::invalid_argument);
}

TEST_CASE("round trip on random points") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-1000, 1000);
    int n = 0;
    while (n < 20000) {
        long x = d(rng), y = d(rng), z = d(rng);
        if (!off_lines(x, y, z) || std::gcd(std::gcd(x, y), z) != 1) continue;
        auto p = pt(x, y, z);
        auto a = chart_lift(p);
        REQUIRE(blow_down(a) == p);
        REQUIRE(coprimality_check(a));
        REQUIRE(a.all_nonzero());
        REQUIRE(is_integral(p) == (abs(a[4]) == 1));
        ++n;
    }
}

TEST_CASE("integrality") {
    CHECK(is_integral(pt(2, 3, 1)));
    CHECK_FALSE(is_integral(pt(1, 2, 4)));
    for (long a = -20; a <= 20; ++a)
        for (long b = -20; b <= 20; ++b)
            if (off_lines(a, b, 1)) REQUIRE(is_integral(pt(a, b, 1)));
    CHECK_THROWS_AS(is_integral(pt(1, 1, 2)), std::invalid_argument);
}

TEST_CASE("orbit canonicalization") {
    auto base = cox(kSample);
    CHECK(canonicalize_orbit(base) == base);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> s(0, 1);
    for (int i = 0; i < 200; ++i) {
        std::array<int, 5> l1, l2;
        for (auto& x : l1) x = s(rng) ? 1 : -1;
        for (auto& x : l2) x = s(rng) ? 1 : -1;
        auto c1 = canonicalize_orbit(apply_sign_action(base, l1));
        auto c2 = canonicalize_orbit(apply_sign_action(base, l2));
        REQUIRE(c1 == c2);
        REQUIRE(c1 == base);
        REQUIRE(canonicalize_orbit(c1) == c1);
    }

    auto neg = apply_sign_action(base, {1, -1, 1, 1, 1});
    CHECK(neg[0] < 0);
    auto c = canonicalize_orbit(neg);
    CHECK(c[0] > 0);
    CHECK(blow_down(c) == blow_down(neg));
}

TEST_CASE("coprimality") {
    CHECK(coprimality_check(cox(kSample)));
    T a = kSample;
    a[0] = 2;
    a[1] = 2;
    CHECK_FALSE(coprimality_check(cox(a)));
    T b = kSample;
    b[4] = 7;
    b[9] = 7;
    CHECK(coprimality_check(cox(b)));
}

TEST_CASE("Cox tuples round-trip through JSON") {
    auto a = chart_lift(ProjectivePoint::from_triple(Integer("1000000000000000000000007"), Integer(3), Integer(1)));
    CHECK(cox_tuple_from_json(cox_tuple_to_json(a)) == a);
    CHECK(blow_down(a).y1 == Integer("1000000000000000000000007"));
}
