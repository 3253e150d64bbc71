#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dp5/heights.hpp"
#include "dp5/types.hpp"

namespace dp5 {

// normal . t <= offset
struct Halfspace {
    std::array<Rational, 4> normal;
    Rational offset;
};

// Volume of {t in R^4, t >= 0, all constraints}. Throws std::domain_error if unbounded.
Rational polytope_volume(const std::vector<Halfspace>& halfspaces);

// 2t_i + 2t_j - t_3 - t_4 <= 1 over all pairs {i,j} of {1,2,3,4}.
std::vector<Halfspace> alpha_polytope();
Rational alpha_exact();

bool is_prime(std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// (1 - 1/p)^4 (1 + 4/p). Throws std::invalid_argument unless p is prime.
Rational euler_local_factor(std::uint64_t p);

using LocalFactor = std::function<Rational(std::uint64_t)>;

// Exact product of the local factors over p <= cutoff.
Rational euler_partial_product(std::uint64_t cutoff);

// Enclosure of the full product. Requires cutoff >= 11.
Interval euler_product(std::uint64_t cutoff);

struct FiniteFieldCount {
    std::uint64_t x_count = 0;
    std::uint64_t u_count = 0;
};

// Points of the surface and of the complement of the boundary over F_p, from the torsor.
FiniteFieldCount ff_surface_count(std::uint32_t p);

bool padic_density_check(std::uint32_t p);
bool padic_density_check(std::uint32_t p, const LocalFactor& local_factor);

struct QuadratureOptions {
    std::uint64_t threshold = 1;
    unsigned max_depth = 30;
};

struct QuadratureStats {
    unsigned depth = 0;
    std::uint64_t cells = 0;
};

// Power of two R with [-R,R]^2 provably containing {max_P |P(y1,y2,0)| <= threshold}.
std::uint64_t containment_radius(const HeightSet& ps, std::uint64_t threshold);

// Enclosure of 2 vol{(y1,y2) : max_P |P(y1,y2,0)| <= threshold} of width <= tol.
Interval archimedean_density(const HeightSet& ps, double tol, const QuadratureOptions& opts = {},
                             QuadratureStats* stats = nullptr);

struct ConstantReport {
    std::string height_set;
    Rational alpha;
    Interval omega_archimedean;
    Interval euler_value;
    Interval c;
    int log_exponent = 4;
    std::uint64_t prime_cutoff = 0;
    double quadrature_tolerance = 0;
};

ConstantReport leading_constant(const HeightSet& ps, std::uint64_t prime_cutoff, double tol);

// Enclosure of c B (ln B)^4.
Interval prediction(const ConstantReport& report, std::uint64_t B);

}  // namespace dp5
