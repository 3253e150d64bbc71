#include "dp5/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dp5::oracle {

bool McEstimate::agrees(double lo, double hi, double k) const {
    double gap = value < lo ? lo - value : (value > hi ? value - hi : 0.0);
    return gap <= k * sigma;
}

namespace {

McEstimate binomial(std::uint64_t hits, std::uint64_t n, double box) {
    double f = double(hits) / double(n);
    return McEstimate{box * f, box * std::sqrt(f * (1 - f) / double(n)), n};
}

}  // namespace

McEstimate mc_polytope_volume(const std::vector<Halfspace>& halfspaces, const std::array<double, 4>& box_hi,
                              std::uint64_t samples, std::uint64_t seed) {
    std::vector<std::array<double, 5>> rows;
    for (const auto& h : halfspaces)
        rows.push_back({h.normal[0].get_d(), h.normal[1].get_d(), h.normal[2].get_d(), h.normal[3].get_d(),
                        h.offset.get_d()});
    std::mt19937_64 rng(seed);
    std::array<std::uniform_real_distribution<double>, 4> u{
        std::uniform_real_distribution<double>(0, box_hi[0]), std::uniform_real_distribution<double>(0, box_hi[1]),
        std::uniform_real_distribution<double>(0, box_hi[2]), std::uniform_real_distribution<double>(0, box_hi[3])};
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double t[4] = {u[0](rng), u[1](rng), u[2](rng), u[3](rng)};
        bool in = std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
            return r[0] * t[0] + r[1] * t[1] + r[2] * t[2] + r[3] * t[3] <= r[4];
        });
        hits += in;
    }
    return binomial(hits, samples, box_hi[0] * box_hi[1] * box_hi[2] * box_hi[3]);
}

McEstimate mc_archimedean_density(const HeightSet& ps, double threshold, double half_width, std::uint64_t samples,
                                  std::uint64_t seed) {
    std::vector<std::array<double, 3>> forms;
    for (const auto& f : ps.forms()) forms.push_back({f.c[0].get_d(), f.c[3].get_d(), f.c[1].get_d()});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-half_width, half_width);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double x = u(rng), y = u(rng);
        bool in = std::all_of(forms.begin(), forms.end(), [&](const auto& c) {
            return std::fabs(c[0] * x * x + c[1] * x * y + c[2] * y * y) <= threshold;
        });
        hits += in;
    }
    return binomial(hits, samples, 2.0 * 4.0 * half_width * half_width);
}

}  // namespace dp5::oracle
