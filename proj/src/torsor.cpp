#include "dp5/torsor.hpp"

#include <stdexcept>

namespace dp5 {

namespace {

using I = CoxTuple;

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer exact_div(const Integer& n, const Integer& d, const char* what) {
    if (d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error(std::string("inexact division computing ") + what);
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// index pairs {j,k} of a_jk at positions A12..A34
constexpr int kPair[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

std::vector<std::pair<int, int>> build_schema() {
    std::vector<std::pair<int, int>> s;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.emplace_back(i, j);
    for (int i = 0; i < 4; ++i)
        for (int p = 0; p < 6; ++p)
            if (kPair[p][0] != i + 1 && kPair[p][1] != i + 1) s.emplace_back(i, 4 + p);
    for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q) {
            bool share = kPair[p][0] == kPair[q][0] || kPair[p][0] == kPair[q][1] || kPair[p][1] == kPair[q][0] ||
                         kPair[p][1] == kPair[q][1];
            if (share) s.emplace_back(4 + p, 4 + q);
        }
    return s;
}

}  // namespace

const std::vector<std::pair<int, int>>& coprimality_schema() {
    static const std::vector<std::pair<int, int>> s = build_schema();
    return s;
}

std::array<Integer, 5> pluecker_residuals(const CoxTuple& a) {
    return {
        a[I::A4] * a[I::A14] - a[I::A3] * a[I::A13] + a[I::A2] * a[I::A12],
        a[I::A4] * a[I::A24] - a[I::A3] * a[I::A23] + a[I::A1] * a[I::A12],
        a[I::A4] * a[I::A34] - a[I::A2] * a[I::A23] + a[I::A1] * a[I::A13],
        a[I::A3] * a[I::A34] - a[I::A2] * a[I::A24] + a[I::A1] * a[I::A14],
        a[I::A12] * a[I::A34] - a[I::A13] * a[I::A24] + a[I::A23] * a[I::A14],
    };
}

std::optional<DependentCoordinates> dependent_coordinates(const Integer& a1, const Integer& a2, const Integer& a3,
                                                          const Integer& a4, const Integer& a12, const Integer& a23,
                                                          const Integer& a34) {
    if (a1 == 0 || a4 == 0) throw std::invalid_argument("dependent coordinates need a1 a4 != 0");
    if (gcd(a1, a4) != 1) throw std::invalid_argument("dependent coordinates need gcd(a1, a4) = 1");
    Integer n13 = a2 * a23 - a4 * a34;
    Integer n24 = a3 * a23 - a1 * a12;
    if (!mpz_divisible_p(n13.get_mpz_t(), a1.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(n24.get_mpz_t(), a4.get_mpz_t())) return std::nullopt;
    DependentCoordinates d;
    d.a13 = exact_div(n13, a1, "a13");
    d.a24 = exact_div(n24, a4, "a24");
    // a1 a4 a14 = a2 a3 a23 - a3 a4 a34 - a1 a2 a12; exact once both congruences hold
    d.a14 = exact_div(a2 * a3 * a23 - a3 * a4 * a34 - a1 * a2 * a12, a1 * a4, "a14");
    CoxTuple t;
    t.v = {a1, a2, a3, a4, a12, d.a13, d.a14, a23, d.a24, a34};
    for (const auto& r : pluecker_residuals(t))
        if (r != 0) throw std::logic_error("dependent coordinates violate the torsor equations");
    return d;
}

ProjectivePoint blow_down(const CoxTuple& a) {
    if (!a.all_nonzero()) throw std::invalid_argument("blow_down needs all coordinates nonzero: " + a.to_string());
    Integer x1 = a[I::A2] * a[I::A3] * a[I::A23];
    Integer x2 = a[I::A1] * a[I::A3] * a[I::A13];
    Integer x3 = a[I::A1] * a[I::A2] * a[I::A12];
    auto y = ProjectivePoint::from_triple(x1, x2, x3);
    if (coprimality_check(a) && abs(y.y1) != abs(x1))
        throw std::logic_error("coprime tuple with non-primitive image: " + a.to_string());
    return y;
}

CoxTuple chart_lift(const ProjectivePoint& y0) {
    auto y = ProjectivePoint::from_triple(y0.y1, y0.y2, y0.y3);
    if (y.on_lines()) throw std::invalid_argument("chart_lift needs a point off the six lines: " + y.to_string());
    const Integer &x1 = y.y1, &x2 = y.y2, &x3 = y.y3;
    CoxTuple a;
    a[I::A1] = gcd(x2, x3);
    a[I::A2] = gcd(x1, x3);
    a[I::A3] = gcd(x1, x2);
    a[I::A4] = gcd(x1 - x2, x1 - x3);
    a[I::A12] = exact_div(x3, a[I::A1] * a[I::A2], "a12");
    a[I::A13] = exact_div(x2, a[I::A1] * a[I::A3], "a13");
    a[I::A23] = exact_div(x1, a[I::A2] * a[I::A3], "a23");
    a[I::A14] = exact_div(x2 - x3, a[I::A1] * a[I::A4], "a14");
    a[I::A24] = exact_div(x1 - x3, a[I::A2] * a[I::A4], "a24");
    a[I::A34] = exact_div(x1 - x2, a[I::A3] * a[I::A4], "a34");
    for (const auto& r : pluecker_residuals(a))
        if (r != 0) throw std::logic_error("chart lift violates the torsor equations at " + y.to_string());
    return a;
}

bool is_integral(const ProjectivePoint& y0) {
    auto y = ProjectivePoint::from_triple(y0.y1, y0.y2, y0.y3);
    if (y.on_lines()) throw std::invalid_argument("is_integral needs a point off the six lines: " + y.to_string());
    return abs(y.y3) == gcd(y.y2, y.y3) * gcd(y.y1, y.y3);
}

CoxTuple apply_sign_action(const CoxTuple& a, const std::array<int, 5>& l) {
    CoxTuple b = a;
    for (int i = 0; i < 4; ++i)
        if (l[i + 1] < 0) b[i] = -b[i];
    for (int p = 0; p < 6; ++p)
        if (l[0] * l[kPair[p][0]] * l[kPair[p][1]] < 0) b[4 + p] = -b[4 + p];
    return b;
}

CoxTuple canonicalize_orbit(const CoxTuple& a) {
    if (!a.all_nonzero()) throw std::invalid_argument("canonicalize_orbit needs all coordinates nonzero");
    std::array<int, 5> l{};
    for (int i = 0; i < 4; ++i) l[i + 1] = sgn(a[i]);
    l[0] = sgn(a[I::A12]) * l[1] * l[2];
    return apply_sign_action(a, l);
}

bool coprimality_check(const CoxTuple& a) {
    for (const auto& [i, j] : coprimality_schema())
        if (gcd(a[i], a[j]) != 1) return false;
    return true;
}

}  // namespace dp5
