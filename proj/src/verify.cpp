#include "dp5/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dp5/enumerator.hpp"
#include "dp5/heights.hpp"
#include "dp5/io.hpp"
#include "dp5/oracles.hpp"
#include "dp5/torsor.hpp"

namespace dp5 {

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"counts", "ff", "padic", "gcd", "alpha", "density", "golden"};
    return names;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_golden_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    std::string line;
    std::getline(in, line);
    if (line.rfind("B,count", 0) != 0) throw std::runtime_error("unexpected header in " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string b, c;
        std::getline(ls, b, ',');
        std::getline(ls, c, ',');
        rows.emplace_back(std::stoull(b), std::stoull(c));
    }
    return rows;
}

namespace {

struct Runner {
    const VerifyConfig& cfg;
    std::ostream* log;
    std::vector<CheckResult> results;
    std::string suite;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r{suite, name, false, "", 0};
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (log) {
            *log << std::left << std::setw(9) << r.suite << std::setw(44) << r.name << (r.pass ? "PASS  " : "FAIL  ")
                 << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.detail
                 << "\n";
            log->flush();
        }
        results.push_back(std::move(r));
    }
};

const std::vector<HeightSet>& builtin_sets() {
    static const std::vector<HeightSet> sets = {HeightSet::p1(), HeightSet::p2(), HeightSet::p3()};
    return sets;
}

void suite_counts(Runner& run) {
    for (const auto& ps : builtin_sets()) {
        for (std::uint64_t B : {1, 4, 10, 50, 100, 500}) {
            if (B > run.cfg.count_bound) continue;
            run.check("count_torsor=count_direct[" + ps.name() + ",B=" + std::to_string(B) + "]",
                      [&](std::string& d) {
                          EnumOptions o{run.cfg.threads};
                          auto t = count_torsor(B, ps, o).count;
                          auto x = count_direct(B, ps, o).count;
                          d = std::to_string(t) + " vs " + std::to_string(x);
                          return t == x;
                      });
        }
    }
}

void suite_ff(Runner& run) {
    for (std::uint32_t p : {2, 3, 5, 7, 11, 13}) {
        run.check("ff_surface_count[p=" + std::to_string(p) + "]", [&](std::string& d) {
            auto c = ff_surface_count(p);
            std::uint64_t q = p;
            d = std::to_string(c.x_count) + "," + std::to_string(c.u_count);
            return c.x_count == q * q + 5 * q + 1 && c.u_count == q * q + 4 * q;
        });
    }
}

void suite_padic(Runner& run) {
    for (std::uint32_t p : {2, 3, 5, 7, 11, 13}) {
        run.check("padic_density_check[p=" + std::to_string(p) + "]", [&](std::string& d) {
            d = rational_string(run.cfg.local_factor(p));
            return padic_density_check(p, run.cfg.local_factor);
        });
    }
}

void suite_gcd(Runner& run) {
    for (const auto& ps : builtin_sets()) {
        run.check("gcd_identity_check[" + ps.name() + "]", [&](std::string& d) {
            std::mt19937_64 rng(run.cfg.seed);
            std::uniform_int_distribution<long> u(-1000000, 1000000);
            std::uint64_t done = 0, bad = 0;
            while (done < run.cfg.gcd_samples) {
                Integer a(u(rng)), b(u(rng)), c(u(rng));
                if (a == 0 && b == 0 && c == 0) continue;
                auto y = ProjectivePoint::from_triple(a, b, c);
                if (y.on_lines()) continue;
                ++done;
                if (!gcd_identity_check(ps, y)) ++bad;
            }
            d = std::to_string(done) + " points, " + std::to_string(bad) + " violations";
            return bad == 0;
        });
    }
}

void suite_alpha(Runner& run) {
    run.check("alpha_exact", [&](std::string& d) {
        Rational a = alpha_exact();
        d = rational_string(a);
        return a == Rational(17, 576);
    });
    run.check("alpha_monte_carlo", [&](std::string& d) {
        auto est = oracle::mc_polytope_volume(alpha_polytope(), {0.5, 0.5, 1, 1}, run.cfg.mc_samples, run.cfg.seed);
        double a = 17.0 / 576.0;
        std::ostringstream os;
        os << std::setprecision(6) << est.value / 2 << " +- " << est.sigma / 2;
        d = os.str();
        return est.agrees(2 * a, 2 * a);
    });
}

void suite_density(Runner& run) {
    const auto& ps = builtin_sets()[0];
    Interval omega;
    run.check("archimedean_density[p1]", [&](std::string& d) {
        omega = archimedean_density(ps, run.cfg.quad_tol);
        d = "[" + to_decimal(omega.lo, 8, false) + ", " + to_decimal(omega.hi, 8, true) + "]";
        return omega.width() <= Rational(run.cfg.quad_tol);
    });
    run.check("archimedean_monte_carlo[p1]", [&](std::string& d) {
        double R = double(containment_radius(ps, 1));
        auto est = oracle::mc_archimedean_density(ps, 1.0, R, run.cfg.mc_samples, run.cfg.seed + 1);
        std::ostringstream os;
        os << std::setprecision(8) << est.value << " +- " << est.sigma;
        d = os.str();
        return est.agrees(omega);
    });
    run.check("archimedean_homogeneity[p1,T=4]", [&](std::string& d) {
        QuadratureOptions o;
        o.threshold = 4;
        auto w4 = archimedean_density(ps, 4 * run.cfg.quad_tol, o);
        Interval scaled{4 * omega.lo, 4 * omega.hi};
        d = "[" + to_decimal(w4.lo, 8, false) + ", " + to_decimal(w4.hi, 8, true) + "]";
        return w4.lo <= scaled.hi && scaled.lo <= w4.hi;
    });
}

void suite_golden(Runner& run) {
    const std::string dir = run.cfg.golden_dir.empty() ? std::string(".") : run.cfg.golden_dir;
    run.check("golden_series[p1]", [&](std::string& d) {
        auto rows = read_golden_series(dir + "/" + kGoldenSeries);
        std::vector<std::uint64_t> bounds;
        for (const auto& [b, c] : rows)
            if (b <= 10000) bounds.push_back(b);
        if (bounds.empty()) {
            d = "no rows with B <= 10^4";
            return false;
        }
        auto got = count_series(bounds, HeightSet::p1(), EnumOptions{run.cfg.threads});
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (got[i].count != rows[i].second) {
                d = "B=" + std::to_string(got[i].bound) + ": " + std::to_string(got[i].count) + " vs golden " +
                    std::to_string(rows[i].second);
                return false;
            }
        }
        d = std::to_string(got.size()) + " rows match";
        return true;
    });
    run.check("golden_constants", [&](std::string& d) {
        std::ifstream in(dir + "/" + kGoldenConstants);
        if (!in) throw std::runtime_error("missing golden file " + dir + "/" + kGoldenConstants);
        nlohmann::json g;
        in >> g;
        for (const auto& [id, k] : g.at("kappa").items()) {
            auto ps = HeightSet::builtin(height_set_id_from_string(id));
            if (integer_to_json(ps.kappa()) != k) {
                d = "kappa mismatch for " + id;
                return false;
            }
        }
        const auto& e = g.at("euler_product");
        unsigned digits = e.at("digits").get<unsigned>();
        auto got = interval_to_json(euler_product(e.at("prime_cutoff").get<std::uint64_t>()), digits);
        if (got != e.at("interval")) {
            d = "euler interval " + got.dump() + " vs golden " + e.at("interval").dump();
            return false;
        }
        const auto& w = g.at("omega_archimedean");
        auto omega = interval_to_json(archimedean_density(HeightSet::p1(), w.at("tol").get<double>()),
                                      w.at("digits").get<unsigned>());
        if (omega != w.at("interval")) {
            d = "omega interval " + omega.dump() + " vs golden " + w.at("interval").dump();
            return false;
        }
        d = "kappa, euler, omega match";
        return true;
    });
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyConfig& cfg, std::ostream* log) {
    for (const auto& s : cfg.suites)
        if (std::find(verify_suite_names().begin(), verify_suite_names().end(), s) == verify_suite_names().end())
            throw std::invalid_argument("unknown suite: " + s);
    Runner run{cfg, log, {}, ""};
    const std::vector<std::pair<std::string, void (*)(Runner&)>> suites = {
        {"counts", suite_counts}, {"ff", suite_ff},           {"padic", suite_padic},  {"gcd", suite_gcd},
        {"alpha", suite_alpha},   {"density", suite_density}, {"golden", suite_golden},
    };
    for (const auto& [name, fn] : suites) {
        if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end())
            continue;
        run.suite = name;
        fn(run);
    }
    return run.results;
}

}  // namespace dp5
