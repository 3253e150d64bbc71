#include <stdexcept>

#include "dp5/constants.hpp"

namespace dp5 {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

Rational euler_local_factor(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("local factor needs a prime, got " + std::to_string(p));
    Integer q(static_cast<unsigned long>(p));
    Integer pm = q - 1;
    Rational f(pm * pm * pm * pm * (q + 4), q * q * q * q * q);
    f.canonicalize();
    return f;
}

namespace {

// Products of (p-1)^4 (p+4) and p^5 over primes in [lo, hi) by a balanced tree.
void product_tree(const std::vector<std::uint32_t>& ps, std::size_t lo, std::size_t hi, Integer& num, Integer& den) {
    if (hi - lo <= 16) {
        num = 1;
        den = 1;
        for (std::size_t i = lo; i < hi; ++i) {
            Integer p(ps[i]);
            Integer pm = p - 1;
            num *= pm * pm * pm * pm * (p + 4);
            den *= p * p * p * p * p;
        }
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Integer n1, d1, n2, d2;
    product_tree(ps, lo, mid, n1, d1);
    product_tree(ps, mid, hi, n2, d2);
    num = n1 * n2;
    den = d1 * d2;
}

}  // namespace

Rational euler_partial_product(std::uint64_t cutoff) {
    auto ps = primes_up_to(cutoff);
    if (ps.empty()) return 1;
    Integer num, den;
    product_tree(ps, 0, ps.size(), num, den);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Interval euler_product(std::uint64_t cutoff) {
    if (cutoff < 11) throw std::invalid_argument("euler_product needs prime cutoff >= 11");
    auto ps = primes_up_to(cutoff);
    Integer num, den;
    product_tree(ps, 0, ps.size(), num, den);
    // For p > cutoff >= 11 each factor lies in (0,1) and |log factor| <= 11/p^2;
    // summing 11/n^2 over all n > cutoff gives a tail in [exp(-11/cutoff), 1].
    const unsigned bits = 256;
    Integer scaled = num << bits;
    Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    Integer scale = Integer(1) << bits;
    Rational plo(lo, scale), phi(hi, scale);
    plo.canonicalize();
    phi.canonicalize();
    Rational tail_lo = 1 - Rational(11, static_cast<unsigned long>(cutoff));
    tail_lo.canonicalize();
    return Interval{plo * tail_lo, phi}.rounded(bits);
}

}  // namespace dp5
