#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dp5 {

using Integer = mpz_class;
using Rational = mpq_class;

// A point of the projective plane, stored as a primitive integer triple
// whose first nonzero coordinate is positive.
struct ProjectivePoint {
    Integer y1, y2, y3;

    ProjectivePoint() = default;

    // Primitivizes and sign-normalizes. Throws std::invalid_argument on (0,0,0).
    static ProjectivePoint from_triple(const Integer& a, const Integer& b, const Integer& c);

    // Index 1..4 of the base point p1=(1:0:0), p2=(0:1:0), p3=(0:0:1), p4=(1:1:1); 0 otherwise.
    int base_point_index() const;

    // y1 y2 y3 (y1-y2)(y1-y3)(y2-y3) = 0
    bool on_lines() const;

    bool operator==(const ProjectivePoint& o) const = default;

    std::string to_string() const;
};

// Cox coordinates in the order (a1,a2,a3,a4,a12,a13,a14,a23,a24,a34).
struct CoxTuple {
    enum Index { A1, A2, A3, A4, A12, A13, A14, A23, A24, A34 };
    std::array<Integer, 10> v;

    CoxTuple() = default;
    static CoxTuple from_int64(const std::array<std::int64_t, 10>& a);

    Integer& operator[](int i) { return v[i]; }
    const Integer& operator[](int i) const { return v[i]; }

    bool all_nonzero() const;
    bool operator==(const CoxTuple& o) const = default;

    std::string to_string() const;
};

// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    // Outward rounding to dyadic endpoints with the given number of fractional bits.
    Interval rounded(unsigned bits) const;

    // Product of two intervals with nonnegative endpoints.
    friend Interval operator*(const Interval& a, const Interval& b);
};

// Decimal string of x rounded toward -inf (down) or +inf (up) at `digits` fractional digits.
std::string to_decimal(const Rational& x, unsigned digits, bool round_up);

// "num/den" (or "num" when den is 1).
std::string rational_string(const Rational& x);
Rational parse_rational(const std::string& s);

}  // namespace dp5
