#pragma once

#include <cstdint>

namespace dp5::detail {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline u64 uabs(i64 a) { return a < 0 ? u64(0) - u64(a) : u64(a); }

// binary gcd on absolute values
inline i64 gcd64(i64 a, i64 b) {
    u64 x = uabs(a), y = uabs(b);
    if (!x) return i64(y);
    if (!y) return i64(x);
    int sh = __builtin_ctzll(x | y);
    x >>= __builtin_ctzll(x);
    do {
        y >>= __builtin_ctzll(y);
        if (x > y) {
            u64 t = x;
            x = y;
            y = t;
        }
        y -= x;
    } while (y);
    return i64(x << sh);
}

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// inverse of a modulo m (m >= 1, gcd(a,m) = 1); 0 when m = 1
inline i64 inv_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return t < 0 ? t + m : t;
}

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

// smallest x >= lo with x = r (mod m)
inline i64 first_at_least(i64 lo, i64 r, i64 m) { return lo + mod(r - lo, m); }

}  // namespace dp5::detail
