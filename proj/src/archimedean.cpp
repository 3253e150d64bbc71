#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dp5/constants.hpp"
#include "intmath.hpp"

namespace dp5 {

namespace {

using namespace detail;

// value num/den with den > 0
struct Frac {
    i128 num, den;
};

inline bool less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }

// q(x,y) = c11 x^2 + c12 x y + c22 y^2, the restriction of a height form to y3 = 0
struct Binary {
    i64 c11, c12, c22;

    i128 at(i64 x, i64 y) const { return i128(c11) * x * x + i128(c12) * x * y + i128(c22) * y * y; }

    // exact range over [x0,x1] x [y0,y1]
    void range(i64 x0, i64 x1, i64 y0, i64 y1, Frac& lo, Frac& hi) const {
        lo = hi = Frac{at(x0, y0), 1};
        auto take = [&](Frac f) {
            if (less(f, lo)) lo = f;
            if (less(hi, f)) hi = f;
        };
        take({at(x0, y1), 1});
        take({at(x1, y0), 1});
        take({at(x1, y1), 1});
        const i128 disc = 4 * i128(c11) * c22 - i128(c12) * c12;
        // along x = const: vertex at y = -c12 x / (2 c22), value x^2 disc / (4 c22)
        if (c22 != 0) {
            for (i64 x : {x0, x1}) {
                i128 n = -i128(c12) * x, d = 2 * i128(c22);
                if (d < 0) n = -n, d = -d;
                if (n > i128(y0) * d && n < i128(y1) * d) {
                    i128 vn = i128(x) * x * disc, vd = 4 * i128(c22);
                    if (vd < 0) vn = -vn, vd = -vd;
                    take({vn, vd});
                }
            }
        }
        if (c11 != 0) {
            for (i64 y : {y0, y1}) {
                i128 n = -i128(c12) * y, d = 2 * i128(c11);
                if (d < 0) n = -n, d = -d;
                if (n > i128(x0) * d && n < i128(x1) * d) {
                    i128 vn = i128(y) * y * disc, vd = 4 * i128(c11);
                    if (vd < 0) vn = -vn, vd = -vd;
                    take({vn, vd});
                }
            }
        }
        // the only interior critical point of a nondegenerate form is the origin;
        // degenerate forms reach their extreme value along a line that meets the boundary
        if (x0 < 0 && 0 < x1 && y0 < 0 && 0 < y1) take({0, 1});
    }
};

enum class Cell { Inside, Outside, Straddle };

struct Quadrature {
    std::vector<Binary> forms;
    i128 theta = 0;  // threshold in grid units
    unsigned depth = 0;
    std::uint64_t cells = 0;
    std::vector<std::uint64_t> inside_at, straddle_at;

    Cell classify(i64 x0, i64 x1, i64 y0, i64 y1) const {
        bool inside_all = true;
        for (const auto& q : forms) {
            Frac lo, hi;
            q.range(x0, x1, y0, y1, lo, hi);
            // outside when |q| > theta on the whole cell
            if (lo.num > theta * lo.den || hi.num < -theta * hi.den) return Cell::Outside;
            if (!(lo.num >= -theta * lo.den && hi.num <= theta * hi.den)) inside_all = false;
        }
        return inside_all ? Cell::Inside : Cell::Straddle;
    }

    void walk(i64 x0, i64 y0, i64 side, unsigned level) {
        ++cells;
        Cell c = classify(x0, x0 + side, y0, y0 + side);
        if (c == Cell::Outside) return;
        if (c == Cell::Inside) {
            ++inside_at[level];
            return;
        }
        if (level == depth) {
            ++straddle_at[level];
            return;
        }
        i64 h = side / 2;
        walk(x0, y0, h, level + 1);
        walk(x0 + h, y0, h, level + 1);
        walk(x0, y0 + h, h, level + 1);
        walk(x0 + h, y0 + h, h, level + 1);
    }
};

}  // namespace

std::uint64_t containment_radius(const HeightSet& ps, std::uint64_t threshold) {
    // y1^2 = Y1Y2 + Y1(Y1-Y2) and y2^2 = Y1Y2 - Y2(Y1-Y2) on y3 = 0, so each
    // |y_i|^2 <= 2 max_{P1}|P| <= 2 kappa threshold.
    Integer need = 2 * ps.kappa() * Integer(static_cast<unsigned long>(threshold));
    std::uint64_t R = 1;
    while (Integer(static_cast<unsigned long>(R * R)) < need) R *= 2;
    return R;
}

Interval archimedean_density(const HeightSet& ps, double tol, const QuadratureOptions& opts, QuadratureStats* stats) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (opts.threshold == 0) throw std::invalid_argument("threshold must be positive");
    const std::uint64_t R = containment_radius(ps, opts.threshold);
    const unsigned rbits = static_cast<unsigned>(std::log2(double(R)) + 0.5);
    std::vector<Binary> forms;
    for (const auto& f : ps.forms()) {
        for (int k : {0, 1, 3})
            if (!f.c[k].fits_slong_p() || abs(f.c[k]) > (1 << 10))
                throw std::out_of_range("height form coefficients too large for the quadrature");
        forms.push_back(Binary{f.c[0].get_si(), f.c[3].get_si(), f.c[1].get_si()});
    }

    Interval result;
    unsigned D = std::min(8u, opts.max_depth);
    for (;;) {
        if (D + rbits > 34) throw std::out_of_range("quadrature depth too large");
        Quadrature q;
        q.forms = forms;
        q.depth = D;
        // grid unit R / 2^D; threshold T becomes T 4^D / R^2 in units^2
        q.theta = i128(opts.threshold) << (2 * D);
        q.theta >>= 2 * rbits;
        q.inside_at.assign(D + 1, 0);
        q.straddle_at.assign(D + 1, 0);
        const i64 n = i64(1) << D;
        // the region is symmetric under y -> -y: integrate over y2 >= 0 and double
        q.walk(-n, 0, n, 0);
        q.walk(0, 0, n, 0);
        Integer inside = 0, straddle = 0;
        for (unsigned L = 0; L <= D; ++L) {
            Integer w = Integer(1) << (2 * (D - L));
            inside += w * Integer(static_cast<unsigned long>(q.inside_at[L]));
            straddle += w * Integer(static_cast<unsigned long>(q.straddle_at[L]));
        }
        // omega = 2 * area = 4 * (half-plane area); unit area R^2 / 4^D
        Rational unit(Integer(static_cast<unsigned long>(R * R)), Integer(1) << (2 * D));
        unit.canonicalize();
        result = Interval{4 * unit * inside, 4 * unit * (inside + straddle)};
        if (stats) {
            stats->depth = D;
            stats->cells += q.cells;
        }
        double width = result.width().get_d();
        if (width <= tol) break;
        if (D >= opts.max_depth)
            throw std::runtime_error("quadrature tolerance not reached within the cell budget");
        // straddling area roughly halves per level
        unsigned extra = static_cast<unsigned>(std::ceil(std::log2(width / tol)));
        D = std::min(opts.max_depth, D + std::max(1u, extra));
    }
    return result;
}

}  // namespace dp5
