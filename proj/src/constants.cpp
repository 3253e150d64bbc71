#include <cmath>
#include <stdexcept>

#include "dp5/constants.hpp"

namespace dp5 {

ConstantReport leading_constant(const HeightSet& ps, std::uint64_t prime_cutoff, double tol) {
    ConstantReport r;
    r.height_set = ps.name();
    r.alpha = alpha_exact();
    r.omega_archimedean = archimedean_density(ps, tol);
    r.euler_value = euler_product(prime_cutoff);
    // rho = 1 and |Delta| = 1 over Q
    r.c = (Interval{r.alpha, r.alpha} * r.omega_archimedean * r.euler_value).rounded(256);
    r.log_exponent = 4;
    r.prime_cutoff = prime_cutoff;
    r.quadrature_tolerance = tol;
    return r;
}

Interval prediction(const ConstantReport& report, std::uint64_t B) {
    if (B < 2) throw std::invalid_argument("prediction needs B >= 2");
    // libm log is faithful to well under 4 ulp; widen by 8 ulp each side
    double l = std::log(static_cast<double>(B));
    double lo = l, hi = l;
    for (int i = 0; i < 8; ++i) {
        lo = std::nextafter(lo, 0.0);
        hi = std::nextafter(hi, INFINITY);
    }
    Rational L0(lo), L1(hi);
    Rational b(static_cast<unsigned long>(B));
    Interval logs{L0 * L0 * L0 * L0 * b, L1 * L1 * L1 * L1 * b};
    return (report.c * logs).rounded(256);
}

}  // namespace dp5
