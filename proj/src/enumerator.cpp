#include "dp5/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "intmath.hpp"

namespace dp5 {

std::string to_string(Method m) { return m == Method::Torsor ? "torsor" : "direct"; }

Method method_from_string(const std::string& s) {
    if (s == "torsor") return Method::Torsor;
    if (s == "direct") return Method::Direct;
    throw std::invalid_argument("unknown method: " + s);
}

namespace {

using namespace detail;

// The ten coordinates are the Pluecker coordinates p_ij (1 <= i < j <= 5) of a
// point of G(2,5): a_i = p_i5, and a_jk = p_lm where {j,k,l,m} = {1,2,3,4}.
// Permuting the columns 1, 2, 5 preserves the torsor, the coprimality schema,
// a12 = p34 and the largest log-anticanonical monomial, so the count can run
// over one representative per orbit of that S3.
constexpr int kSlot[6][6] = {
    {-1, -1, -1, -1, -1, -1},
    {-1, -1, 9, 8, 7, 0},
    {-1, -1, -1, 6, 5, 1},
    {-1, -1, -1, -1, 4, 2},
    {-1, -1, -1, -1, -1, 3},
    {-1, -1, -1, -1, -1, -1},
};

constexpr int kPerm[6][6] = {
    {0, 1, 2, 3, 4, 5}, {0, 2, 1, 3, 4, 5}, {0, 5, 2, 3, 4, 1},
    {0, 1, 5, 3, 4, 2}, {0, 2, 5, 3, 4, 1}, {0, 5, 1, 3, 4, 2},
};

inline i64 plk(const Cox64& a, int i, int j) { return i < j ? a[kSlot[i][j]] : -a[kSlot[j][i]]; }

Cox64 permute(const Cox64& a, const int* s) {
    Cox64 b{};
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) b[kSlot[i][j]] = plk(a, s[i], s[j]);
    return b;
}

Cox64 canonical(Cox64 a) {
    static constexpr int pair[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    i64 l[5];
    for (int i = 0; i < 4; ++i) {
        l[i + 1] = a[i] > 0 ? 1 : -1;
        a[i] *= l[i + 1];
    }
    l[0] = a[4] * l[1] * l[2] > 0 ? 1 : -1;
    for (int p = 0; p < 6; ++p) a[4 + p] *= l[0] * l[pair[p][0]] * l[pair[p][1]];
    return a;
}

// Largest of the ten monomials of log-anticanonical degree (lifts of the P3 forms).
i128 monomial_max(const Cox64& x) {
    const i128 a1 = x[0], a2 = x[1], a3 = x[2], a4 = x[3], a12 = x[4], a13 = x[5], a14 = x[6], a23 = x[7],
               a24 = x[8], a34 = x[9];
    const i128 m[10] = {a1 * a2 * a23 * a14, a1 * a2 * a13 * a24, a2 * a3 * a23 * a34, a1 * a3 * a13 * a34,
                        a2 * a2 * a23 * a24, a1 * a1 * a13 * a14, a3 * a4 * a34 * a34, a1 * a2 * a12 * a34,
                        a2 * a4 * a24 * a34, a1 * a4 * a14 * a34};
    i128 mx = 0;
    for (auto v : m) mx = std::max(mx, abs128(v));
    return mx;
}

// Heights from the coordinates of each form in the basis whose lifts are
// a1a2a23a14, a1a2a13a24, a2a3a23a34, a1a3a13a34.
struct HeightEval {
    std::vector<std::array<i64, 4>> coords;

    explicit HeightEval(const HeightSet& ps) {
        for (const auto& c : ps.basis_coordinates()) {
            std::array<i64, 4> r{};
            for (int k = 0; k < 4; ++k) {
                if (!c[k].fits_slong_p() || abs(c[k]) > kMaxMonomialBound)
                    throw std::out_of_range("height form coefficients too large for the machine-integer path");
                r[k] = c[k].get_si();
            }
            coords.push_back(r);
        }
    }

    // valid when every monomial is below kMaxMonomialBound
    i64 operator()(const Cox64& x) const {
        const i64 m[4] = {x[0] * x[1] * x[7] * x[6], x[0] * x[1] * x[5] * x[8], x[1] * x[2] * x[7] * x[9],
                          x[0] * x[2] * x[5] * x[9]};
        i128 mx = 0;
        for (const auto& c : coords) {
            i128 v = i128(c[0]) * m[0] + i128(c[1]) * m[1] + i128(c[2]) * m[2] + i128(c[3]) * m[3];
            mx = std::max(mx, abs128(v));
        }
        return mx > INT64_MAX ? INT64_MAX : i64(mx);
    }
};

i64 monomial_bound(std::uint64_t B, const HeightSet& ps) {
    Integer y = ps.kappa_monomial() * Integer(static_cast<unsigned long>(B));
    if (y > kMaxMonomialBound) throw std::out_of_range("height bound too large for the machine-integer path");
    return y.get_si();
}

// Solutions of |s (c - k s)| <= K with k > 0, as at most two real intervals.
int parabola_band(double c, double k, double K, double out[2][2]) {
    const double pad = 2.0 + 1e-9 * (std::fabs(c) / k + std::sqrt(K / k));
    double d = std::sqrt(c * c + 4 * k * K);
    double r1 = (c - d) / (2 * k), r2 = (c + d) / (2 * k);
    double disc = c * c - 4 * k * K;
    if (disc <= 0) {
        out[0][0] = r1 - pad;
        out[0][1] = r2 + pad;
        return 1;
    }
    double e = std::sqrt(disc);
    double s1 = (c - e) / (2 * k), s2 = (c + e) / (2 * k);
    if (s2 - s1 <= 2 * pad) {
        out[0][0] = r1 - pad;
        out[0][1] = r2 + pad;
        return 1;
    }
    out[0][0] = r1 - pad;
    out[0][1] = s1 + pad;
    out[1][0] = s2 - pad;
    out[1][1] = r2 + pad;
    return 2;
}

// Walks all orbit representatives with a2 fixed and hands every orbit member of
// height <= Bmax to sink(tuple, height). Representatives are the canonical
// tuples whose key a1 a3 a4 is minimal over the orbit (ties broken by the
// tuple itself); the key of the other members runs over a2a3a4, a1a23a24,
// a2a13a14, a13a14a34 and a23a24a34.
template <class Sink>
void walk_a2(i64 a2, i64 Y, i64 Bmax, const HeightEval& height, Sink& sink) {
    for (i64 a1 = 1; a1 <= a2; ++a1) {
        if (gcd64(a1, a2) != 1) continue;
        const i64 T = a1 * a2;
        if (T > Y) break;
        for (i64 a3 = 1; a2 * a2 * a3 <= Y; ++a3) {
            if (gcd64(a3, T) != 1) continue;
            for (i64 a4 = 1; a2 * a2 * a3 * a4 <= Y; ++a4) {
                if (gcd64(a4, T * a3) != 1) continue;
                const i64 d = a3 * a4;
                const i64 k0 = a1 * d;
                // a3 a23 = a1 (mod a4)
                const i64 r4 = i64(i128(a1 % a4) * inv_mod(a3, a4) % a4);
                // a2^2 |a23 a24| <= Y with a4 a24 = a3 a23 - a1
                const double K5 = double(Y) * double(a4) / (double(a2) * double(a2));
                const i64 U = i64((a1 + std::sqrt(double(a1) * a1 + 4.0 * a3 * K5)) / (2.0 * a3)) + 2;
                const i64 inv41 = inv_mod(a4, a1);
                for (i64 u = first_at_least(-U, r4, a4); u <= U; u += a4) {
                    if (u == 0) continue;
                    const i64 a24 = (a3 * u - a1) / a4;
                    if (a24 == 0) continue;
                    const i128 uv = i128(u) * a24;
                    if (i128(a2) * a2 * abs128(uv) > Y) continue;
                    if (abs128(uv) < d) continue;
                    if (gcd64(u, a1) != 1 || gcd64(a24, a1) != 1 || gcd64(u, a4) != 1 || gcd64(a24, a3) != 1 ||
                        gcd64(u, a24) != 1)
                        continue;
                    // a4 a34 = a2 a23 (mod a1)
                    const i64 r1 = i64(i128(mod(a2, a1)) * mod(u, a1) % a1 * inv41 % a1);
                    i64 W = i64(std::sqrt(double(Y) / double(d))) + 1;
                    W = std::min(W, Y / (a2 * a3 * i64(uabs(u))));
                    W = std::min(W, Y / T);
                    // a1 a3 a13 a34 = a3 a34 (a2 a23 - a4 a34)
                    double band[2][2];
                    const int nb = parabola_band(double(a2) * double(u), double(a4), double(Y) / double(a3), band);
                    i64 prev_hi = -W - 1;
                    for (int q = 0; q < nb; ++q) {
                        i64 lo = std::max<i64>(-W, i64(std::floor(std::max(band[q][0], -double(W) - 1))));
                        i64 hi = std::min<i64>(W, i64(std::ceil(std::min(band[q][1], double(W) + 1))));
                        lo = std::max(lo, prev_hi + 1);
                        if (lo > hi) continue;
                        prev_hi = hi;
                        for (i64 s = first_at_least(lo, r1, a1); s <= hi; s += a1) {
                            if (s == 0) continue;
                            const i64 a13 = (a2 * u - a4 * s) / a1;
                            if (a13 == 0) continue;
                            const i128 n14 = i128(a2) * a3 * u - i128(a3) * a4 * s - i128(a1) * a2;
                            const i64 a14 = i64(n14 / (i128(a1) * a4));
                            if (a14 == 0) continue;
                            const i128 ks[5] = {i128(a2) * d, i128(a1) * abs128(uv),
                                                i128(a2) * abs128(i128(a13) * a14),
                                                abs128(i128(a13) * a14) * uabs(s), abs128(uv) * uabs(s)};
                            bool strict = true, keep = true;
                            for (auto k : ks) {
                                if (k < k0) {
                                    keep = false;
                                    break;
                                }
                                if (k == k0) strict = false;
                            }
                            if (!keep) continue;
                            const Cox64 y{a1, a2, a3, a4, 1, a13, a14, u, a24, s};
                            if (monomial_max(y) > Y) continue;
                            if (gcd64(a1, s) != 1 || gcd64(a2, a13) != 1 || gcd64(a2, a14) != 1 ||
                                gcd64(a2, s) != 1 || gcd64(a3, a14) != 1 || gcd64(a4, a13) != 1)
                                continue;
                            if (gcd64(a13, a14) != 1 || gcd64(a13, u) != 1 || gcd64(a13, s) != 1 ||
                                gcd64(a14, a24) != 1 || gcd64(a14, s) != 1 || gcd64(u, s) != 1 ||
                                gcd64(a24, s) != 1)
                                continue;
                            if (strict) {
                                // trivial stabilizer: six distinct points
                                for (const auto& p : kPerm) {
                                    Cox64 x = permute(y, p);
                                    i64 h = height(x);
                                    if (h <= Bmax) sink(x, h);
                                }
                                continue;
                            }
                            Cox64 orb[6];
                            bool minimal = true;
                            for (int k = 0; k < 6 && minimal; ++k) {
                                orb[k] = canonical(permute(y, kPerm[k]));
                                i128 kk = i128(orb[k][0]) * orb[k][2] * orb[k][3];
                                if (k > 0 && (kk < k0 || (kk == k0 && orb[k] < y))) minimal = false;
                            }
                            if (!minimal) continue;
                            for (int k = 0; k < 6; ++k) {
                                bool dup = false;
                                for (int j = 0; j < k; ++j) dup = dup || orb[j] == orb[k];
                                if (dup) continue;
                                i64 h = height(orb[k]);
                                if (h <= Bmax) sink(orb[k], h);
                            }
                        }
                    }
                }
            }
        }
    }
}

template <class MakeSink>
void run_parallel(i64 Y, unsigned threads, MakeSink&& body) {
    std::atomic<i64> next{1};
    auto worker = [&](unsigned t) {
        for (;;) {
            i64 a2 = next.fetch_add(1);
            if (a2 * a2 > Y) break;
            body(t, a2);
        }
    };
    if (threads <= 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<CountRecord> count_series(const std::vector<std::uint64_t>& bounds, const HeightSet& ps,
                                      const EnumOptions& opts) {
    if (bounds.empty()) return {};
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (bounds[i] == 0) throw std::invalid_argument("height bounds must be positive");
        if (i && bounds[i] <= bounds[i - 1]) throw std::invalid_argument("height bounds must be ascending");
    }
    auto t0 = std::chrono::steady_clock::now();
    const i64 Bmax = i64(bounds.back());
    const i64 Y = monomial_bound(bounds.back(), ps);
    const HeightEval height(ps);
    const unsigned nt = std::max(1u, opts.threads);
    std::vector<std::vector<std::uint64_t>> hist(nt, std::vector<std::uint64_t>(bounds.size(), 0));
    run_parallel(Y, nt, [&](unsigned t, i64 a2) {
        auto& h = hist[t];
        auto sink = [&](const Cox64&, i64 ht) {
            auto it = std::lower_bound(bounds.begin(), bounds.end(), std::uint64_t(ht));
            ++h[it - bounds.begin()];
        };
        walk_a2(a2, Y, Bmax, height, sink);
    });
    double secs = seconds_since(t0);
    std::vector<CountRecord> out;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        for (unsigned t = 0; t < nt; ++t) acc += hist[t][i];
        out.push_back(CountRecord{bounds[i], acc, ps.name(), Method::Torsor, secs});
    }
    return out;
}

CountRecord count_torsor(std::uint64_t B, const HeightSet& ps, const EnumOptions& opts) {
    if (B == 0) throw std::invalid_argument("height bound must be positive");
    return count_series({B}, ps, opts).front();
}

void for_each_torsor_point(std::uint64_t B, const HeightSet& ps, const TupleVisitor& visit) {
    if (B == 0) throw std::invalid_argument("height bound must be positive");
    const i64 Y = monomial_bound(B, ps);
    const HeightEval height(ps);
    auto sink = [&](const Cox64& x, i64 h) { visit(canonical(x), h); };
    for (i64 a2 = 1; a2 * a2 <= Y; ++a2) walk_a2(a2, Y, i64(B), height, sink);
}

std::string csv_header() { return "B,count,height_set,method,seconds"; }

std::string csv_row(const CountRecord& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.bound << ',' << r.count << ',' << r.height_set << ',' << to_string(r.method) << ','
       << r.elapsed_seconds;
    return os.str();
}

std::string to_csv(const std::vector<CountRecord>& rows) {
    std::string s = csv_header() + "\n";
    for (const auto& r : rows) s += csv_row(r) + "\n";
    return s;
}

}  // namespace dp5
