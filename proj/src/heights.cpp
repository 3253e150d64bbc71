#include "dp5/heights.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dp5 {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Solve M x = t for the 4x4 matrix with columns `cols`; nullopt if singular.
std::optional<std::array<Rational, 4>> solve4(const std::array<const std::array<Integer, 4>*, 4>& cols,
                                              const std::array<Integer, 4>& t) {
    Rational m[4][5];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m[r][c] = (*cols[c])[r];
        m[r][4] = t[r];
    }
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[c][k]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::array<Rational, 4> x;
    for (int r = 0; r < 4; ++r) x[r] = m[r][4] / m[r][r];
    return x;
}

int rank4(const std::vector<std::array<Integer, 4>>& rows) {
    std::vector<std::array<Rational, 4>> m;
    for (const auto& r : rows) {
        std::array<Rational, 4> q;
        for (int i = 0; i < 4; ++i) q[i] = r[i];
        m.push_back(q);
    }
    int rank = 0;
    for (int c = 0; c < 4 && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

Integer ceil_q(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace

QuadraticForm::QuadraticForm(long c11, long c22, long c33, long c12, long c13, long c23)
    : c{Integer(c11), Integer(c22), Integer(c33), Integer(c12), Integer(c13), Integer(c23)} {}

Integer QuadraticForm::operator()(const Integer& y1, const Integer& y2, const Integer& y3) const {
    return c[0] * y1 * y1 + c[1] * y2 * y2 + c[2] * y3 * y3 + c[3] * y1 * y2 + c[4] * y1 * y3 +
           c[5] * y2 * y3;
}

bool QuadraticForm::vanishes_at_p3_p4() const {
    return c[2] == 0 && c[0] + c[1] + c[2] + c[3] + c[4] + c[5] == 0;
}

std::array<Integer, 4> QuadraticForm::basis_coordinates() const {
    if (!vanishes_at_p3_p4()) throw std::invalid_argument("form does not vanish at p3 and p4");
    return {-c[4], -c[5], c[0], -c[1]};
}

std::string to_string(HeightSetId id) {
    switch (id) {
        case HeightSetId::P1: return "p1";
        case HeightSetId::P2: return "p2";
        case HeightSetId::P3: return "p3";
        case HeightSetId::Custom: return "custom";
    }
    return "custom";
}

HeightSetId height_set_id_from_string(const std::string& s) {
    if (s == "p1" || s == "P1") return HeightSetId::P1;
    if (s == "p2" || s == "P2") return HeightSetId::P2;
    if (s == "p3" || s == "P3") return HeightSetId::P3;
    if (s == "custom") return HeightSetId::Custom;
    throw std::invalid_argument("unknown height set id: " + s);
}

std::vector<QuadraticForm> p1_forms() {
    return {
        QuadraticForm(0, 0, 0, 1, -1, 0),   // Y1(Y2-Y3)
        QuadraticForm(0, 0, 0, 1, 0, -1),   // Y2(Y1-Y3)
        QuadraticForm(1, 0, 0, -1, 0, 0),   // Y1(Y1-Y2)
        QuadraticForm(0, -1, 0, 1, 0, 0),   // Y2(Y1-Y2)
    };
}

std::vector<QuadraticForm> p2_forms() {
    return {
        QuadraticForm(1, 0, 0, 0, -1, 0),   // Y1(Y1-Y3)
        QuadraticForm(0, 1, 0, 0, 0, -1),   // Y2(Y2-Y3)
        QuadraticForm(1, 1, 0, -2, 0, 0),   // (Y1-Y2)^2
        QuadraticForm(0, 0, 0, 0, 1, -1),   // Y3(Y1-Y2)
    };
}

std::vector<QuadraticForm> p3_forms() {
    auto f = p1_forms();
    for (auto& q : p2_forms()) f.push_back(q);
    f.push_back(QuadraticForm(1, 0, 0, -1, -1, 1));   // (Y1-Y2)(Y1-Y3)
    f.push_back(QuadraticForm(0, -1, 0, 1, -1, 1));   // (Y1-Y2)(Y2-Y3)
    return f;
}

HeightSet::HeightSet(HeightSetId id, std::vector<QuadraticForm> forms) : id_(id), forms_(std::move(forms)) {
    if (forms_.empty()) throw std::invalid_argument("height set needs at least one form");
    for (const auto& f : forms_) {
        if (!f.vanishes_at_p3_p4())
            throw std::invalid_argument("height form does not vanish at (0:0:1) and (1:1:1)");
        coords_.push_back(f.basis_coordinates());
    }
    if (rank4(coords_) != 4) throw std::invalid_argument("height forms do not span the 4-dimensional space");
    kappa_ = comparison_constant(p1_forms(), forms_);
    kappa_mono_ = comparison_constant(p3_forms(), forms_);
}

HeightSet HeightSet::builtin(HeightSetId id) {
    switch (id) {
        case HeightSetId::P1: return HeightSet(id, p1_forms());
        case HeightSetId::P2: return HeightSet(id, p2_forms());
        case HeightSetId::P3: return HeightSet(id, p3_forms());
        case HeightSetId::Custom: break;
    }
    throw std::invalid_argument("custom height sets need explicit forms");
}

HeightSet HeightSet::custom(std::vector<QuadraticForm> forms) {
    return HeightSet(HeightSetId::Custom, std::move(forms));
}

std::string HeightSet::cache_key() const {
    if (id_ != HeightSetId::Custom) return name();
    std::string s = "custom:";
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (i) s += ";";
        for (int k = 0; k < 6; ++k) {
            if (k) s += ",";
            s += forms_[i].c[k].get_str();
        }
    }
    return s;
}

Integer eval_form(const QuadraticForm& P, const ProjectivePoint& y) {
    return P(y.y1, y.y2, y.y3);
}

Integer finite_height_denominator(const ProjectivePoint& y) {
    return gcd(y.y1, y.y2) * gcd(y.y1 - y.y2, y.y1 - y.y3);
}

namespace {

ProjectivePoint checked_primitive(const ProjectivePoint& y) {
    auto p = ProjectivePoint::from_triple(y.y1, y.y2, y.y3);
    if (p.base_point_index() != 0) throw std::invalid_argument("point is one of p1..p4: " + p.to_string());
    return p;
}

}  // namespace

bool gcd_identity_check(const HeightSet& ps, const ProjectivePoint& y0) {
    auto y = checked_primitive(y0);
    Integer g = 0;
    for (const auto& P : ps.forms()) g = gcd(g, eval_form(P, y));
    return g == finite_height_denominator(y);
}

Rational height_projective(const HeightSet& ps, const ProjectivePoint& y0) {
    auto y = checked_primitive(y0);
    Integer m = 0;
    for (const auto& P : ps.forms()) {
        Integer v = abs(eval_form(P, y));
        if (v > m) m = v;
    }
    if (m == 0) throw std::domain_error("all height forms vanish at " + y.to_string());
    Rational h(m, finite_height_denominator(y));
    h.canonicalize();
    return h;
}

Integer lift_ptilde(const QuadraticForm& P, const CoxTuple& a) {
    using I = CoxTuple;
    Integer d = a[I::A3] * a[I::A4];
    if (d == 0) throw std::domain_error("lift needs a3 a4 != 0");
    Integer x1 = a[I::A2] * a[I::A3] * a[I::A23];
    Integer x2 = a[I::A1] * a[I::A3] * a[I::A13];
    Integer x3 = a[I::A1] * a[I::A2] * a[I::A12];
    Integer v = P(x1, x2, x3);
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
        throw std::domain_error("inexact lift: Pluecker relations violated by " + a.to_string());
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return q;
}

Integer height_cox(const HeightSet& ps, const CoxTuple& a) {
    Integer m = 0;
    for (const auto& P : ps.forms()) {
        Integer v = abs(lift_ptilde(P, a));
        if (v > m) m = v;
    }
    return m;
}

Integer comparison_constant(const std::vector<QuadraticForm>& targets, const std::vector<QuadraticForm>& forms) {
    std::vector<std::array<Integer, 4>> cols;
    for (const auto& f : forms) cols.push_back(f.basis_coordinates());
    if (rank4(cols) != 4) throw std::invalid_argument("height forms do not span the 4-dimensional space");
    const std::size_t n = cols.size();
    // The minimal coefficient sum is a linear program whose optimum sits at a basic
    // solution, so scanning every basis among the forms finds it exactly.
    std::vector<std::optional<Rational>> best(targets.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    std::array<const std::array<Integer, 4>*, 4> basis{&cols[i], &cols[j], &cols[k], &cols[l]};
                    for (std::size_t t = 0; t < targets.size(); ++t) {
                        auto x = solve4(basis, targets[t].basis_coordinates());
                        if (!x) break;
                        Rational s = abs((*x)[0]) + abs((*x)[1]) + abs((*x)[2]) + abs((*x)[3]);
                        if (!best[t] || s < *best[t]) best[t] = s;
                    }
                }
    Rational worst = 0;
    for (const auto& b : best) worst = std::max(worst, *b);
    return ceil_q(worst);
}

Integer comparison_constant(const HeightSet& ps) { return ps.kappa(); }

}  // namespace dp5
