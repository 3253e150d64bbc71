#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>

#include "dp5/constants.hpp"

namespace dp5 {

namespace {

using Vec = std::array<Rational, 4>;
using Row = std::array<Rational, 4>;

// Solve the 4x4 system rows . x = rhs; nullopt if singular.
std::optional<Vec> solve(std::array<Row, 4> m, Vec rhs) {
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    Vec x;
    for (int r = 0; r < 4; ++r) x[r] = rhs[r] / m[r][r];
    return x;
}

Rational dot(const Row& a, const Vec& x) { return a[0] * x[0] + a[1] * x[1] + a[2] * x[2] + a[3] * x[3]; }

int affine_rank(const std::vector<const Vec*>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<Vec> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec d;
        for (int k = 0; k < 4; ++k) d[k] = (*pts[i])[k] - (*pts[0])[k];
        m.push_back(d);
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

Rational det4(const std::array<Vec, 4>& a) {
    std::array<Vec, 4> m = a;
    Rational det = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

struct Polytope {
    std::vector<Row> a;
    std::vector<Rational> b;
    std::vector<Vec> verts;
    std::vector<std::uint64_t> tight;  // bit j set when row j is tight

    // Pulling triangulation of the face spanned by `face` (vertex ids) of dimension k.
    void triangulate(const std::vector<int>& face, int k, std::vector<std::vector<int>>& out) const {
        if (static_cast<int>(face.size()) == k + 1) {
            out.push_back(face);
            return;
        }
        const int v0 = face.front();
        std::set<std::vector<int>> seen;
        for (std::size_t j = 0; j < a.size(); ++j) {
            std::vector<int> g;
            for (int v : face)
                if (tight[v] >> j & 1) g.push_back(v);
            if (g.empty() || g.size() == face.size()) continue;
            if (std::find(g.begin(), g.end(), v0) != g.end()) continue;
            if (!seen.insert(g).second) continue;
            std::vector<const Vec*> pts;
            for (int v : g) pts.push_back(&verts[v]);
            if (affine_rank(pts) != k - 1) continue;
            std::vector<std::vector<int>> sub;
            triangulate(g, k - 1, sub);
            for (auto& s : sub) {
                s.push_back(v0);
                out.push_back(std::move(s));
            }
        }
    }
};

void check_bounded(const std::vector<Row>& a) {
    // A nonzero recession direction d >= 0 with a.d <= 0 exists iff the
    // polytope {d >= 0, a.d <= 0, sum d = 1} has a vertex.
    const std::size_t m = a.size();
    Row ones{1, 1, 1, 1};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto d = solve({a[i], a[j], a[k], ones}, {0, 0, 0, 1});
                if (!d) continue;
                bool ok = true;
                for (std::size_t r = 0; r < m && ok; ++r) ok = dot(a[r], *d) <= 0;
                if (ok) throw std::domain_error("polyhedron is unbounded");
            }
}

}  // namespace

Rational polytope_volume(const std::vector<Halfspace>& halfspaces) {
    Polytope P;
    for (const auto& h : halfspaces) {
        if (h.normal[0] == 0 && h.normal[1] == 0 && h.normal[2] == 0 && h.normal[3] == 0)
            throw std::invalid_argument("halfspace with zero normal");
        P.a.push_back(h.normal);
        P.b.push_back(h.offset);
    }
    for (int i = 0; i < 4; ++i) {
        Row r{0, 0, 0, 0};
        r[i] = -1;
        P.a.push_back(r);
        P.b.push_back(0);
    }
    const std::size_t m = P.a.size();
    if (m > 64) throw std::invalid_argument("too many halfspaces");
    check_bounded(P.a);

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t l = k + 1; l < m; ++l) {
                    auto x = solve({P.a[i], P.a[j], P.a[k], P.a[l]}, {P.b[i], P.b[j], P.b[k], P.b[l]});
                    if (!x) continue;
                    std::uint64_t t = 0;
                    bool feasible = true;
                    for (std::size_t r = 0; r < m && feasible; ++r) {
                        Rational v = dot(P.a[r], *x);
                        if (v > P.b[r]) feasible = false;
                        if (v == P.b[r]) t |= std::uint64_t(1) << r;
                    }
                    if (!feasible) continue;
                    if (std::find(P.verts.begin(), P.verts.end(), *x) != P.verts.end()) continue;
                    P.verts.push_back(*x);
                    P.tight.push_back(t);
                }
    if (P.verts.empty()) return 0;
    std::vector<const Vec*> all;
    std::vector<int> ids;
    for (std::size_t v = 0; v < P.verts.size(); ++v) {
        all.push_back(&P.verts[v]);
        ids.push_back(static_cast<int>(v));
    }
    if (affine_rank(all) < 4) return 0;

    std::vector<std::vector<int>> simplices;
    P.triangulate(ids, 4, simplices);
    Rational vol = 0;
    for (const auto& s : simplices) {
        std::array<Vec, 4> e;
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) e[r][k] = P.verts[s[r]][k] - P.verts[s[4]][k];
        vol += abs(det4(e));
    }
    return vol / 24;
}

std::vector<Halfspace> alpha_polytope() {
    std::vector<Halfspace> h;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Halfspace s{{0, 0, 0, 0}, 1};
            s.normal[i] += 2;
            s.normal[j] += 2;
            s.normal[2] -= 1;
            s.normal[3] -= 1;
            h.push_back(s);
        }
    return h;
}

Rational alpha_exact() { return polytope_volume(alpha_polytope()) / 2; }

}  // namespace dp5
