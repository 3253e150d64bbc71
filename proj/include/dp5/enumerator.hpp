#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dp5/heights.hpp"

namespace dp5 {

enum class Method { Torsor, Direct };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct CountRecord {
    std::uint64_t bound = 0;
    std::uint64_t count = 0;
    std::string height_set;
    Method method = Method::Torsor;
    double elapsed_seconds = 0.0;
};

struct EnumOptions {
    unsigned threads = 1;
};

// Canonical Cox tuple in machine integers, same order as CoxTuple.
using Cox64 = std::array<std::int64_t, 10>;

// Called once per counted point with its canonical tuple and exact height.
using TupleVisitor = std::function<void(const Cox64&, std::int64_t)>;
using PointVisitor = std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t)>;

// Largest monomial bound kappa_monomial * B the machine-integer path accepts.
constexpr std::int64_t kMaxMonomialBound = std::int64_t(1) << 31;

CountRecord count_torsor(std::uint64_t B, const HeightSet& ps, const EnumOptions& opts = {});
CountRecord count_direct(std::uint64_t B, const HeightSet& ps, const EnumOptions& opts = {});
std::vector<CountRecord> count_series(const std::vector<std::uint64_t>& bounds, const HeightSet& ps,
                                      const EnumOptions& opts = {});

// Single-threaded walks over the counted points, for invariant checks.
void for_each_torsor_point(std::uint64_t B, const HeightSet& ps, const TupleVisitor& visit);
void for_each_direct_point(std::uint64_t B, const HeightSet& ps, const PointVisitor& visit);

std::string csv_header();
std::string csv_row(const CountRecord& r);
std::string to_csv(const std::vector<CountRecord>& rows);

}  // namespace dp5
