#include "dp5/types.hpp"

#include <stdexcept>

namespace dp5 {

ProjectivePoint ProjectivePoint::from_triple(const Integer& a, const Integer& b, const Integer& c) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::invalid_argument("zero triple is not a projective point");
    int s = sgn(a) != 0 ? sgn(a) : (sgn(b) != 0 ? sgn(b) : sgn(c));
    if (s < 0) g = -g;
    ProjectivePoint y;
    y.y1 = a / g;
    y.y2 = b / g;
    y.y3 = c / g;
    return y;
}

int ProjectivePoint::base_point_index() const {
    if (y2 == 0 && y3 == 0) return 1;
    if (y1 == 0 && y3 == 0) return 2;
    if (y1 == 0 && y2 == 0) return 3;
    if (y1 == y2 && y2 == y3) return 4;
    return 0;
}

bool ProjectivePoint::on_lines() const {
    return y1 == 0 || y2 == 0 || y3 == 0 || y1 == y2 || y1 == y3 || y2 == y3;
}

std::string ProjectivePoint::to_string() const {
    return "(" + y1.get_str() + ":" + y2.get_str() + ":" + y3.get_str() + ")";
}

CoxTuple CoxTuple::from_int64(const std::array<std::int64_t, 10>& a) {
    CoxTuple t;
    for (int i = 0; i < 10; ++i) {
        mpz_set_si(t.v[i].get_mpz_t(), static_cast<long>(a[i]));
    }
    return t;
}

bool CoxTuple::all_nonzero() const {
    for (const auto& x : v)
        if (x == 0) return false;
    return true;
}

std::string CoxTuple::to_string() const {
    std::string s = "(";
    for (int i = 0; i < 10; ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Interval Interval::rounded(unsigned bits) const {
    Integer scale = 1;
    scale <<= bits;
    Integer l, h;
    Rational sl = lo * scale, sh = hi * scale;
    mpz_fdiv_q(l.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
    mpz_cdiv_q(h.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
    Interval r{Rational(l, scale), Rational(h, scale)};
    r.lo.canonicalize();
    r.hi.canonicalize();
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo < 0 || b.lo < 0) throw std::domain_error("interval product expects nonnegative endpoints");
    return Interval{a.lo * b.lo, a.hi * b.hi};
}

std::string to_decimal(const Rational& x, unsigned digits, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational s = x * scale;
    Integer q;
    if (round_up)
        mpz_cdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    bool neg = q < 0;
    if (neg) q = -q;
    std::string d = q.get_str();
    if (d.size() <= digits) d = std::string(digits + 1 - d.size(), '0') + d;
    std::string out = d.substr(0, d.size() - digits);
    if (digits) out += "." + d.substr(d.size() - digits);
    return neg ? "-" + out : out;
}

std::string rational_string(const Rational& q) {
    Rational x(q);
    x.canonicalize();
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace dp5
