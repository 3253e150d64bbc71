#include <array>
#include <stdexcept>

#include "dp5/constants.hpp"
#include "dp5/torsor.hpp"

namespace dp5 {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 inv_p(u32 a, u32 p) {
    u64 r = 1, b = a % p;
    for (u32 e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return u32(r);
}

// Nullspace of a 4x6 matrix over F_p, as a list of basis vectors.
std::vector<std::array<u32, 6>> nullspace(std::array<std::array<u32, 6>, 4> m, u32 p) {
    int pivcol[4] = {-1, -1, -1, -1};
    int rank = 0;
    for (int c = 0; c < 6 && rank < 4; ++c) {
        int piv = -1;
        for (int r = rank; r < 4; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        u64 iv = inv_p(m[rank][c], p);
        for (int k = 0; k < 6; ++k) m[rank][k] = u32(m[rank][k] * iv % p);
        for (int r = 0; r < 4; ++r) {
            if (r == rank || !m[r][c]) continue;
            u64 f = m[r][c];
            for (int k = 0; k < 6; ++k) m[r][k] = u32((m[r][k] + (p - f) * m[rank][k]) % p);
        }
        pivcol[rank++] = c;
    }
    std::vector<std::array<u32, 6>> basis;
    for (int free = 0; free < 6; ++free) {
        bool is_piv = false;
        for (int r = 0; r < rank; ++r) is_piv = is_piv || pivcol[r] == free;
        if (is_piv) continue;
        std::array<u32, 6> v{};
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivcol[r]] = (p - m[r][free]) % p;
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

FiniteFieldCount ff_surface_count(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("ff_surface_count needs a prime");
    if (p > 13) throw std::invalid_argument("ff_surface_count brute force is limited to p <= 13");
    // unstable locus: some coprime pair vanishing together
    std::vector<u32> pair_masks;
    for (const auto& [i, j] : coprimality_schema()) pair_masks.push_back((1u << i) | (1u << j));
    auto stable = [&](u32 zero_mask) {
        for (u32 m : pair_masks)
            if ((zero_mask & m) == m) return false;
        return true;
    };

    u64 total = 0, on_u = 0;
    std::array<u32, 4> a{};
    for (a[0] = 0; a[0] < p; ++a[0])
        for (a[1] = 0; a[1] < p; ++a[1])
            for (a[2] = 0; a[2] < p; ++a[2])
                for (a[3] = 0; a[3] < p; ++a[3]) {
                    u32 zi = 0;
                    for (int i = 0; i < 4; ++i)
                        if (!a[i]) zi |= 1u << i;
                    if (__builtin_popcount(zi) > 1) continue;
                    // the first four torsor equations are linear in (a12,a13,a14,a23,a24,a34)
                    auto neg = [p](u32 x) { return (p - x) % p; };
                    std::array<std::array<u32, 6>, 4> m{{
                        {a[1], neg(a[2]), a[3], 0, 0, 0},
                        {a[0], 0, 0, neg(a[2]), a[3], 0},
                        {0, a[0], 0, neg(a[1]), 0, a[3]},
                        {0, 0, a[0], 0, neg(a[1]), a[2]},
                    }};
                    auto basis = nullspace(m, p);
                    const std::size_t dim = basis.size();
                    u64 n = 1;
                    for (std::size_t k = 0; k < dim; ++k) n *= p;
                    std::vector<u32> coef(dim, 0);
                    for (u64 idx = 0; idx < n; ++idx) {
                        u64 t = idx;
                        for (std::size_t k = 0; k < dim; ++k) {
                            coef[k] = u32(t % p);
                            t /= p;
                        }
                        std::array<u64, 6> x{};
                        for (std::size_t k = 0; k < dim; ++k)
                            for (int c = 0; c < 6; ++c) x[c] += u64(coef[k]) * basis[k][c];
                        for (auto& v : x) v %= p;
                        // a12 a34 - a13 a24 + a23 a14
                        if ((x[0] * x[5] + (p - x[1]) * x[4] + x[3] * x[2]) % p) continue;
                        u32 z = zi;
                        for (int c = 0; c < 6; ++c)
                            if (!x[c]) z |= 1u << (4 + c);
                        if (!stable(z)) continue;
                        ++total;
                        if (x[0]) ++on_u;
                    }
                }
    u64 torus = 1;
    for (int i = 0; i < 5; ++i) torus *= p - 1;
    if (total % torus || on_u % torus) throw std::logic_error("torus orbit count is not an integer");
    return FiniteFieldCount{total / torus, on_u / torus};
}

bool padic_density_check(std::uint32_t p, const LocalFactor& local_factor) {
    auto c = ff_surface_count(p);
    Rational q(static_cast<unsigned long>(p));
    Rational one_minus = 1 - 1 / q;
    Rational rhs = one_minus * one_minus * one_minus * one_minus * Rational(static_cast<unsigned long>(c.u_count)) /
                   (q * q);
    return local_factor(p) == rhs;
}

bool padic_density_check(std::uint32_t p) { return padic_density_check(p, euler_local_factor); }

}  // namespace dp5
