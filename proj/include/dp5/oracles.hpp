#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dp5/constants.hpp"
#include "dp5/heights.hpp"

namespace dp5::oracle {

struct McEstimate {
    double value = 0;
    double sigma = 0;
    std::uint64_t samples = 0;

    // |value - x| <= k sigma for the closest x in [lo, hi]
    bool agrees(double lo, double hi, double k = 4.0) const;
    bool agrees(const Interval& x, double k = 4.0) const { return agrees(x.lo.get_d(), x.hi.get_d(), k); }
};

// Hit-or-miss volume of {t >= 0, constraints} inside the box [0, hi_1] x ... x [0, hi_4].
McEstimate mc_polytope_volume(const std::vector<Halfspace>& halfspaces, const std::array<double, 4>& box_hi,
                              std::uint64_t samples, std::uint64_t seed);

// Hit-or-miss estimate of 2 vol{max_P |P(y1,y2,0)| <= threshold} over [-half_width, half_width]^2.
McEstimate mc_archimedean_density(const HeightSet& ps, double threshold, double half_width, std::uint64_t samples,
                                  std::uint64_t seed);

}  // namespace dp5::oracle
