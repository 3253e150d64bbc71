#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dp5/enumerator.hpp"
#include "intmath.hpp"

namespace dp5 {

namespace {

using namespace detail;

struct Forms {
    std::vector<std::array<i64, 6>> c;

    explicit Forms(const HeightSet& ps) {
        for (const auto& f : ps.forms()) {
            std::array<i64, 6> r{};
            for (int k = 0; k < 6; ++k) {
                if (!f.c[k].fits_slong_p() || abs(f.c[k]) > (1 << 20))
                    throw std::out_of_range("height form coefficients too large for the direct search");
                r[k] = f.c[k].get_si();
            }
            c.push_back(r);
        }
    }

    i128 max_abs(i64 y1, i64 y2, i64 y3) const {
        i128 mx = 0;
        for (const auto& k : c) {
            i128 v = i128(k[0]) * y1 * y1 + i128(k[1]) * y2 * y2 + i128(k[2]) * y3 * y3 + i128(k[3]) * y1 * y2 +
                     i128(k[4]) * y1 * y3 + i128(k[5]) * y2 * y3;
            mx = std::max(mx, abs128(v));
        }
        return mx;
    }
};

struct Factor {
    i64 p;
    int e;
};

// Smallest-prime-factor table on [0, n].
std::vector<std::uint32_t> spf_table(i64 n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (i64 j = i; j <= n; j += i)
            if (!spf[j]) spf[j] = std::uint32_t(i);
    }
    return spf;
}

void add_factors(std::vector<Factor>& f, i64 n, const std::vector<std::uint32_t>& spf) {
    while (n > 1) {
        i64 p = spf[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        auto it = std::find_if(f.begin(), f.end(), [p](const Factor& x) { return x.p == p; });
        if (it == f.end())
            f.push_back({p, e});
        else
            it->e += e;
    }
}

template <class F>
void divisors_up_to(const std::vector<Factor>& f, std::size_t i, i64 d, i64 X, F&& out) {
    if (i == f.size()) {
        out(d);
        return;
    }
    i64 q = d;
    for (int e = 0; e <= f[i].e; ++e) {
        divisors_up_to(f, i + 1, q, X, out);
        if (q > X / f[i].p) break;
        q *= f[i].p;
    }
}

// Every integral point of height <= B has a primitive representative with
// 0 < y1 <= X and |y2|, |y3| <= X for X = kappa B. Integrality forces
// |y3| = gcd(y2,y3) gcd(y1,y3), so y3 divides y1 y2 and the y3 loop runs over
// divisors only.
template <class Sink>
void scan_y1(i64 y1, i64 X, i64 B, const Forms& forms, const std::vector<std::uint32_t>& spf, Sink& sink) {
    std::vector<Factor> f1, f;
    add_factors(f1, y1, spf);
    for (i64 y2 = -X; y2 <= X; ++y2) {
        if (y2 == 0 || y2 == y1) continue;
        const i64 g12 = gcd64(y1, y2);
        f = f1;
        add_factors(f, y2 < 0 ? -y2 : y2, spf);
        divisors_up_to(f, 0, 1, X, [&](i64 d) {
            if (gcd64(g12, d) != 1) return;
            if (d != gcd64(y2, d) * gcd64(y1, d)) return;
            for (i64 y3 : {d, -d}) {
                if (y3 == y1 || y3 == y2) continue;
                i128 den = i128(g12) * gcd64(y1 - y2, y1 - y3);
                i128 top = forms.max_abs(y1, y2, y3);
                if (top == 0) throw std::logic_error("all height forms vanish off the lines");
                if (top > i128(B) * den) continue;
                sink(y1, y2, y3, i64(top / den));
            }
        });
    }
}

i64 search_box(std::uint64_t B, const HeightSet& ps) {
    Integer x = ps.kappa() * Integer(static_cast<unsigned long>(B));
    if (x > (i64(1) << 24)) throw std::out_of_range("height bound too large for the direct search");
    return x.get_si();
}

}  // namespace

CountRecord count_direct(std::uint64_t B, const HeightSet& ps, const EnumOptions& opts) {
    if (B == 0) throw std::invalid_argument("height bound must be positive");
    auto t0 = std::chrono::steady_clock::now();
    const i64 X = search_box(B, ps);
    const Forms forms(ps);
    const auto spf = spf_table(X);
    const unsigned nt = std::max(1u, opts.threads);
    std::vector<std::uint64_t> counts(nt, 0);
    std::atomic<i64> next{1};
    auto worker = [&](unsigned t) {
        auto sink = [&](i64, i64, i64, i64) { ++counts[t]; };
        for (i64 y1; (y1 = next.fetch_add(1)) <= X;) scan_y1(y1, X, i64(B), forms, spf, sink);
    };
    if (nt == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return CountRecord{B, total, ps.name(), Method::Direct, secs};
}

void for_each_direct_point(std::uint64_t B, const HeightSet& ps, const PointVisitor& visit) {
    if (B == 0) throw std::invalid_argument("height bound must be positive");
    const i64 X = search_box(B, ps);
    const Forms forms(ps);
    const auto spf = spf_table(X);
    auto sink = [&](i64 a, i64 b, i64 c, i64 h) { visit(a, b, c, h); };
    for (i64 y1 = 1; y1 <= X; ++y1) scan_y1(y1, X, i64(B), forms, spf, sink);
}

}  // namespace dp5
