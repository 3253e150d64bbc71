#include "dp5/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dp5/constants.hpp"
#include "dp5/enumerator.hpp"
#include "dp5/io.hpp"
#include "dp5/oracles.hpp"
#include "dp5/verify.hpp"

#ifndef DP5_GOLDEN_DIR
#define DP5_GOLDEN_DIR "data/golden"
#endif

namespace dp5 {

using nlohmann::json;

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return;
    }
    if (!j.is_object() || j.value("code_version", "") != kCodeVersion || !j.contains("counts")) return;
    for (const auto& [k, v] : j.at("counts").items()) {
        if (v.is_number_unsigned()) entries_[k] = v.get<std::uint64_t>();
    }
}

std::string CountCache::key(const std::string& height_set, const std::string& method, std::uint64_t bound) {
    return height_set + "|" + method + "|" + std::to_string(bound);
}

std::optional<std::uint64_t> CountCache::get(const std::string& height_set, const std::string& method,
                                             std::uint64_t bound) const {
    auto it = entries_.find(key(height_set, method, bound));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::put(const std::string& height_set, const std::string& method, std::uint64_t bound,
                     std::uint64_t count) {
    entries_[key(height_set, method, bound)] = count;
}

void CountCache::save() const {
    json j;
    j["code_version"] = kCodeVersion;
    j["counts"] = json::object();
    for (const auto& [k, v] : entries_) j["counts"][k] = v;
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot write cache " + path_);
    out << j.dump(1) << "\n";
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::uint64_t bound = 0;
    std::string grid;
    std::string height_set = "p1";
    std::string method = "torsor";
    std::uint64_t prime_cutoff = 1'000'000;
    double quad_tol = 1e-4;
    std::uint64_t mc_samples = 10'000'000;
    unsigned threads = 1;
    std::string out_path;
    std::string cache_path;
    std::vector<std::string> suites;
    std::string golden_dir = DP5_GOLDEN_DIR;
};

HeightSet parse_height_set(const std::string& s) {
    try {
        if (s.rfind("file:", 0) == 0) return load_height_set(s.substr(5));
        auto id = height_set_id_from_string(s);
        if (id == HeightSetId::Custom) throw std::invalid_argument("use file:<path> for custom height sets");
        return HeightSet::builtin(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::uint64_t> parse_grid(const std::string& s) {
    std::vector<std::uint64_t> g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad grid entry '" + item + "'");
        }
        if (used != item.size() || v == 0 || item[0] == '-') throw UsageError("bad grid entry '" + item + "'");
        if (!g.empty() && v <= g.back()) throw UsageError("grid must be strictly ascending");
        g.push_back(v);
    }
    if (g.empty()) throw UsageError("empty grid");
    return g;
}

// Writes to --out when given, else to the command's stdout.
void emit(const Config& c, std::ostream& out, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot write " + c.out_path);
    f << text;
}

std::vector<CountRecord> counts_with_cache(const Config& c, const std::vector<std::uint64_t>& bounds,
                                           const HeightSet& ps, Method method) {
    std::optional<CountCache> cache;
    if (!c.cache_path.empty()) cache.emplace(c.cache_path);
    const std::string key = ps.cache_key(), m = to_string(method);
    std::vector<CountRecord> rows(bounds.size());
    std::vector<std::uint64_t> missing;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        rows[i] = CountRecord{bounds[i], 0, ps.name(), method, 0.0};
        auto hit = cache ? cache->get(key, m, bounds[i]) : std::nullopt;
        if (hit)
            rows[i].count = *hit;
        else
            missing.push_back(bounds[i]);
    }
    if (!missing.empty()) {
        std::vector<CountRecord> fresh;
        EnumOptions o{c.threads};
        if (method == Method::Torsor) {
            fresh = count_series(missing, ps, o);
        } else {
            for (auto b : missing) fresh.push_back(count_direct(b, ps, o));
        }
        for (const auto& r : fresh) {
            auto it = std::find(bounds.begin(), bounds.end(), r.bound);
            rows[it - bounds.begin()] = r;
            if (cache) cache->put(key, m, r.bound, r.count);
        }
        if (cache) cache->save();
    }
    return rows;
}

int cmd_count(const Config& c, std::ostream& out) {
    auto ps = parse_height_set(c.height_set);
    Method m;
    try {
        m = method_from_string(c.method);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(c, out, to_csv(counts_with_cache(c, {c.bound}, ps, m)));
    return 0;
}

int cmd_series(const Config& c, std::ostream& out) {
    auto ps = parse_height_set(c.height_set);
    emit(c, out, to_csv(counts_with_cache(c, parse_grid(c.grid), ps, Method::Torsor)));
    return 0;
}

int cmd_constants(const Config& c, std::ostream& out) {
    auto ps = parse_height_set(c.height_set);
    if (c.prime_cutoff < 11) throw UsageError("--prime-cutoff must be at least 11");
    auto report = leading_constant(ps, c.prime_cutoff, c.quad_tol);
    emit(c, out, constant_report_to_json(report).dump(2) + "\n");
    return 0;
}

int cmd_compare(const Config& c, std::ostream& out) {
    auto ps = parse_height_set(c.height_set);
    auto grid = parse_grid(c.grid);
    if (grid.front() < 2) throw UsageError("compare needs bounds >= 2");
    if (c.prime_cutoff < 11) throw UsageError("--prime-cutoff must be at least 11");
    auto rows = counts_with_cache(c, grid, ps, Method::Torsor);
    auto report = leading_constant(ps, c.prime_cutoff, c.quad_tol);
    std::string s = "B,count,prediction_lo,prediction_hi,ratio_lo,ratio_hi\n";
    for (const auto& r : rows) {
        Interval pred = prediction(report, r.bound);
        Rational n(static_cast<unsigned long>(r.count));
        s += std::to_string(r.bound) + "," + std::to_string(r.count) + "," + to_decimal(pred.lo, 6, false) + "," +
             to_decimal(pred.hi, 6, true) + "," + to_decimal(n / pred.hi, 9, false) + "," +
             to_decimal(n / pred.lo, 9, true) + "\n";
    }
    emit(c, out, s);
    return 0;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
    VerifyConfig v;
    v.suites = c.suites;
    v.count_bound = c.bound ? c.bound : 500;
    v.mc_samples = c.mc_samples;
    v.quad_tol = c.quad_tol;
    v.threads = c.threads;
    v.golden_dir = c.golden_dir;
    std::vector<CheckResult> res;
    try {
        res = run_verify(v, &out);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::size_t failed = 0;
    const CheckResult* first = nullptr;
    for (const auto& r : res)
        if (!r.pass) {
            ++failed;
            if (!first) first = &r;
        }
    out << res.size() - failed << "/" << res.size() << " checks passed\n";
    if (first) {
        err << "FAILED: " << first->name << " (" << first->detail << ")\n";
        return 1;
    }
    return 0;
}

int cmd_alpha(const Config& c, std::ostream& out) {
    Rational a = alpha_exact();
    bool ok = a == Rational(17, 576);
    out << rational_string(a) << "\n";
    if (c.mc_samples > 0) {
        auto est = oracle::mc_polytope_volume(alpha_polytope(), {0.5, 0.5, 1, 1}, c.mc_samples, 20240229);
        double exact = a.get_d();
        bool agrees = est.agrees(2 * exact, 2 * exact);
        out << std::setprecision(8) << "monte_carlo " << est.value / 2 << " +- " << est.sigma / 2 << " ("
            << est.samples << " samples, " << (agrees ? "within" : "outside") << " 4 sigma)\n";
        ok = ok && agrees;
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral points of bounded log-anticanonical height on the quintic del Pezzo surface"};
    app.require_subcommand(1);
    Config c;

    auto add_height_set = [&](CLI::App* s) {
        s->add_option("--height-set", c.height_set, "p1|p2|p3|file:<path>")->capture_default_str();
    };
    auto add_threads = [&](CLI::App* s) {
        s->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out_path, "output file (default stdout)"); };
    auto add_cache = [&](CLI::App* s) { s->add_option("--cache", c.cache_path, "JSON cache of exact counts"); };
    auto add_constants = [&](CLI::App* s) {
        s->add_option("--prime-cutoff", c.prime_cutoff, "Euler product over primes <= cutoff")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        s->add_option("--quad-tol", c.quad_tol, "width of the archimedean density enclosure")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* count = app.add_subcommand("count", "count integral points of height <= B");
    count->add_option("--height-bound", c.bound, "B")->required()->check(CLI::PositiveNumber);
    add_height_set(count);
    count->add_option("--method", c.method, "torsor|direct")
        ->check(CLI::IsMember({"torsor", "direct"}))
        ->capture_default_str();
    add_threads(count);
    add_out(count);
    add_cache(count);

    auto* series = app.add_subcommand("series", "counts for a grid of bounds in one pass");
    series->add_option("--grid", c.grid, "ascending bounds b1,b2,...")->required();
    add_height_set(series);
    add_threads(series);
    add_out(series);
    add_cache(series);

    auto* constants = app.add_subcommand("constants", "enclosure of the predicted leading constant as JSON");
    add_height_set(constants);
    add_constants(constants);
    add_out(constants);

    auto* compare = app.add_subcommand(
        "compare", "N(B) against c B (log B)^4 with the natural logarithm; report only, no pass/fail");
    compare->add_option("--grid", c.grid, "ascending bounds b1,b2,...")->required();
    add_height_set(compare);
    add_constants(compare);
    add_threads(compare);
    add_out(compare);
    add_cache(compare);

    auto* verify = app.add_subcommand("verify", "run the invariant suite against oracles and golden files");
    verify->add_option("--suite", c.suites, "restrict to suites: counts ff padic gcd alpha density golden");
    verify->add_option("--height-bound", c.bound, "largest bound for cross-method counts (default 500)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--mc-samples", c.mc_samples, "Monte Carlo samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--quad-tol", c.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--golden-dir", c.golden_dir, "directory with golden files")->capture_default_str();
    add_threads(verify);

    auto* alpha = app.add_subcommand("alpha", "exact polytope constant, with a Monte Carlo cross-check");
    alpha->add_option("--mc-samples", c.mc_samples, "Monte Carlo samples (0 skips)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) return cmd_count(c, out);
        if (*series) return cmd_series(c, out);
        if (*constants) return cmd_constants(c, out);
        if (*compare) return cmd_compare(c, out);
        if (*verify) return cmd_verify(c, out, err);
        if (*alpha) return cmd_alpha(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dp5
