#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dp5/constants.hpp"
#include "dp5/io.hpp"
#include "dp5/oracles.hpp"

using namespace dp5;

namespace {

Halfspace hs(std::array<long, 4> n, long offset) {
    Halfspace h;
    for (int i = 0; i < 4; ++i) h.normal[i] = n[i];
    h.offset = offset;
    return h;
}

std::vector<Halfspace> unit_cube() {
    std::vector<Halfspace> h;
    for (int i = 0; i < 4; ++i) {
        std::array<long, 4> n{};
        n[i] = 1;
        h.push_back(hs(n, 1));
    }
    return h;
}

// Twice the area of {|y1 y2|, |y1 (y1 - y2)|, |y2 (y1 - y2)| <= 1}, integrating the
// length of each vertical slice in closed form.
double p1_density_oracle(int n) {
    auto slice = [](double x) {
        if (x == 0) return 0.0;
        double r = 1 / std::abs(x);
        double lo = std::max(-r, x - r), hi = std::min(r, x + r);
        double s = std::sqrt(x * x + 4);
        lo = std::max(lo, (x - s) / 2);
        hi = std::min(hi, (x + s) / 2);
        return std::max(0.0, hi - lo);
    };
    const double a = -2, b = 2, h = (b - a) / n;
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += slice(a + (i + 0.5) * h);
    return 2 * sum * h;
}

}  // namespace

TEST_CASE("polytope volumes") {
    CHECK(polytope_volume(unit_cube()) == 1);
    CHECK(polytope_volume({hs({1, 1, 1, 1}, 1)}) == Rational(1, 24));
    auto box = unit_cube();
    box.push_back(hs({1, 1, 0, 0}, 1));
    CHECK(polytope_volume(box) == Rational(1, 2));
    CHECK(polytope_volume(alpha_polytope()) == Rational(17, 288));
    CHECK(alpha_exact() == Rational(17, 576));

    CHECK_THROWS_AS(polytope_volume({hs({1, 1, 1, 0}, 1)}), std::domain_error);
    CHECK_THROWS_AS(polytope_volume({hs({0, 0, 0, 0}, 1)}), std::invalid_argument);
}

TEST_CASE("alpha polytope shape") {
    auto h = alpha_polytope();
    CHECK(h.size() == 6);
    // dropping the {3,4} constraint leaves a larger polytope
    std::vector<Halfspace> fewer;
    for (const auto& x : h)
        if (!(x.normal[0] == 0 && x.normal[1] == 0)) fewer.push_back(x);
    CHECK(fewer.size() == 5);
    auto box = fewer;
    for (const auto& c : unit_cube()) box.push_back(c);
    CHECK(polytope_volume(box) > polytope_volume(h));
}

TEST_CASE("polytope volumes agree with Monte Carlo") {
    auto e = oracle::mc_polytope_volume(alpha_polytope(), {1, 1, 1, 1}, 1'000'000, 99);
    CHECK(e.agrees(17.0 / 288, 17.0 / 288));
    auto s = oracle::mc_polytope_volume({hs({1, 1, 1, 1}, 1)}, {1, 1, 1, 1}, 1'000'000, 5);
    CHECK(s.agrees(1.0 / 24, 1.0 / 24));
    auto c = oracle::mc_polytope_volume({hs({1, 2, 0, 0}, 1)}, {1, 1, 1, 1}, 1'000'000, 6);
    CHECK(c.agrees(0.25, 0.25));
    CHECK_FALSE(c.agrees(0.3, 0.3));
}

TEST_CASE("primes") {
    CHECK(primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(is_prime(1'000'003));
    CHECK_FALSE(is_prime(1'000'001));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("local factors") {
    CHECK(euler_local_factor(2) == Rational(3, 16));
    CHECK(euler_local_factor(3) == Rational(112, 243));
    CHECK(euler_local_factor(5) == Rational(256 * 9, 625 * 5));
    CHECK_THROWS_AS(euler_local_factor(4), std::invalid_argument);
    CHECK_THROWS_AS(euler_local_factor(1), std::invalid_argument);
}

TEST_CASE("local factors stay within the tail majorant") {
    for (auto p : primes_up_to(100000)) {
        if (p < 11) continue;
        long double x = 1.0L / p;
        long double lf = 4 * std::log1p(-x) + std::log1p(4 * x);
        REQUIRE(lf <= 0);
        REQUIRE(-lf <= 11 * x * x);
    }
}

TEST_CASE("Euler product") {
    CHECK(euler_partial_product(3) == Rational(3, 16) * Rational(112, 243));
    CHECK(euler_partial_product(4) == euler_partial_product(3));
    CHECK_THROWS_AS(euler_product(10), std::invalid_argument);

    auto a = euler_product(100), b = euler_product(10000), c = euler_product(1000000);
    CHECK(a.contains(b));
    CHECK(b.contains(c));
    CHECK(c.width() < b.width());
    CHECK(c.width() < Rational(2, 100000));
    CHECK(c.lo > 0);
    CHECK(c.hi < Rational(1, 20));
    CHECK(c.contains(euler_partial_product(1000000) * Rational(999999, 1000000)));
}

TEST_CASE("finite field counts") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto c = ff_surface_count(p);
        CHECK(c.x_count == std::uint64_t(p) * p + 5 * p + 1);
        CHECK(c.u_count == std::uint64_t(p) * p + 4 * p);
    }
    CHECK_THROWS_AS(ff_surface_count(4), std::invalid_argument);
    CHECK_THROWS_AS(ff_surface_count(17), std::invalid_argument);
}

TEST_CASE("p-adic densities") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(padic_density_check(p));
    LocalFactor wrong = [](std::uint64_t p) -> Rational {
        Rational x(1, p);
        Rational q = 1 - x;
        return q * q * q * (1 + 4 * x);
    };
    CHECK_FALSE(padic_density_check(3, wrong));
}

TEST_CASE("archimedean density matches the slice integral") {
    auto p1 = HeightSet::p1();
    QuadratureStats st;
    auto w = archimedean_density(p1, 1e-4, {}, &st);
    CHECK(w.width() <= Rational(1, 10000));
    CHECK(st.depth > 0);
    CHECK(st.cells > 0);
    double exact = p1_density_oracle(4'000'000);
    CHECK(w.lo.get_d() <= exact + 1e-8);
    CHECK(w.hi.get_d() >= exact - 1e-8);
}

TEST_CASE("archimedean density properties") {
    auto p1 = HeightSet::p1();
    auto coarse = archimedean_density(p1, 1e-2);
    auto fine = archimedean_density(p1, 1e-3);
    CHECK(coarse.contains(fine));

    QuadratureOptions four;
    four.threshold = 4;
    auto w4 = archimedean_density(p1, 4e-3, four);
    CHECK(w4.hi >= 4 * fine.lo);
    CHECK(w4.lo <= 4 * fine.hi);

    auto w3 = archimedean_density(HeightSet::p3(), 1e-3);
    CHECK(w3.lo <= fine.hi);
    CHECK(w3.hi < fine.lo);

    auto mc = oracle::mc_archimedean_density(p1, 1.0, 2.0, 1'000'000, 42);
    CHECK(mc.agrees(fine));
    auto mc2 = oracle::mc_archimedean_density(HeightSet::p2(), 1.0, 2.0, 1'000'000, 43);
    CHECK(mc2.agrees(archimedean_density(HeightSet::p2(), 1e-3)));

    CHECK(containment_radius(p1, 1) >= 2);
    CHECK_THROWS_AS(archimedean_density(p1, 0.0), std::invalid_argument);
    QuadratureOptions shallow;
    shallow.max_depth = 9;
    CHECK_THROWS_AS(archimedean_density(p1, 1e-6, shallow), std::runtime_error);
}

TEST_CASE("leading constant") {
    auto p1 = HeightSet::p1();
    auto r = leading_constant(p1, 10000, 1e-3);
    CHECK(r.alpha == Rational(17, 576));
    CHECK(r.log_exponent == 4);
    CHECK(r.prime_cutoff == 10000);
    CHECK(r.c.lo > 0);
    CHECK(r.c.contains(r.omega_archimedean.lo * r.euler_value.lo * r.alpha));
    CHECK(r.c.contains(r.omega_archimedean.hi * r.euler_value.hi * r.alpha));

    auto wide = leading_constant(p1, 10000, 1e-2);
    CHECK(wide.c.contains(r.c));
    auto refined = leading_constant(p1, 1000000, 1e-4);
    CHECK(r.c.contains(refined.c));

    auto pred = prediction(r, 1000000);
    CHECK(pred.lo > 0);
    double mid = r.c.lo.get_d() * 1e6 * std::pow(std::log(1e6), 4);
    CHECK(pred.lo.get_d() <= mid * 1.0000001);
    CHECK(pred.hi.get_d() >= mid * 0.9999999);

    auto j = constant_report_to_json(r, 20);
    CHECK(j["alpha"] == "17/576");
    CHECK(j["log_exponent"] == 4);
    CHECK(j["c"].size() == 2);
    CHECK(j["c"][0].get<std::string>().size() > 20);
}

TEST_CASE("decimal rendering rounds outward") {
    Rational third(1, 3);
    CHECK(to_decimal(third, 5, false) == "0.33333");
    CHECK(to_decimal(third, 5, true) == "0.33334");
    CHECK(to_decimal(Rational(-1, 3), 3, false) == "-0.334");
    CHECK(to_decimal(Rational(2), 2, true) == "2.00");
    CHECK(rational_string(Rational(34, 1152)) == "17/576");
    CHECK(parse_rational("17/576") == Rational(17, 576));
    auto j = interval_to_json(Interval{third, Rational(2, 3)}, 4);
    CHECK(j[0] == "0.3333");
    CHECK(j[1] == "0.6667");
}
