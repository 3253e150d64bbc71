#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace dp5 {

// Bumped whenever a change could alter a count; cache entries from other versions are ignored.
constexpr const char* kCodeVersion = "dp5-count-2";

// JSON file of exact counts keyed by (code version, height set, method, bound).
class CountCache {
public:
    explicit CountCache(std::string path);

    std::optional<std::uint64_t> get(const std::string& height_set, const std::string& method,
                                     std::uint64_t bound) const;
    void put(const std::string& height_set, const std::string& method, std::uint64_t bound, std::uint64_t count);
    void save() const;

private:
    static std::string key(const std::string& height_set, const std::string& method, std::uint64_t bound);

    std::string path_;
    std::map<std::string, std::uint64_t> entries_;
};

// Exit codes: 0 success, 1 check failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dp5
