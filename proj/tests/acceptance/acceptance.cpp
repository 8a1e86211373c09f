// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 when
// any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frontier/core/search.hpp"
#include "frontier/report/explore.hpp"

using namespace frontier;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void check(const std::string& name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Archive soundness: member signs plus an audit of every insertion against
// the entries present at that time.
template <typename D>
std::string audit(const core::SearchResult<typename D::Model>& r, const D& domain) {
    for (const auto& e : r.archive.entries) {
        const auto& x = e.individual;
        if (!(*x.m1.eval > 0.0) || !(*x.m2.eval < 0.0)) {
            return "entry with wrong member signs";
        }
        if (domain.evaluate(x.m1.model) != *x.m1.eval || domain.evaluate(x.m2.model) != *x.m2.eval) {
            return "stale cached eval";
        }
    }
    for (const auto& ev : r.log.events()) {
        if (ev.kind == core::EventKind::insert && ev.nearest_distance &&
            !(*ev.nearest_distance > r.archive.threshold)) {
            return "insertion within the threshold";
        }
        if ((ev.kind == core::EventKind::replace || ev.kind == core::EventKind::discard) &&
            !(*ev.nearest_distance <= r.archive.threshold)) {
            return "competition beyond the threshold";
        }
    }
    return {};
}

template <typename D>
Outcome soundness(const D& domain, const core::SearchConfig& search, double time_limit) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = core::run_search(search, domain);
    const double wall = seconds_since(start);
    const auto problem = audit(r, domain);
    Outcome o;
    o.pass = problem.empty() && wall < time_limit;
    o.detail = fmt("%.0f entries, %.1f s (limit %.0f s)", double(r.archive.size()), wall, time_limit);
    if (!problem.empty()) {
        o.detail += ", " + problem;
    }
    return o;
}

bool brute_dominates(const core::Objectives& a, const core::Objectives& b) {
    return a.f1 >= b.f1 && a.f2 <= b.f2 && (a.f1 > b.f1 || a.f2 < b.f2);
}

Outcome sort_oracle() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> v(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
        std::vector<core::Objectives> objs(n);
        for (auto& o : objs) {
            o = {double(v(rng)), double(v(rng))};
        }
        std::set<std::size_t> remaining;
        for (std::size_t i = 0; i < n; ++i) {
            remaining.insert(i);
        }
        const auto fronts = core::nondominated_sort(objs);
        for (const auto& front : fronts) {
            std::set<std::size_t> expected;
            for (std::size_t i : remaining) {
                bool dominated = false;
                for (std::size_t j : remaining) {
                    dominated = dominated || brute_dominates(objs[j], objs[i]);
                }
                if (!dominated) {
                    expected.insert(i);
                }
            }
            if (std::set<std::size_t>(front.begin(), front.end()) != expected) {
                return {false, fmt("population %.0f differs", trial)};
            }
            for (std::size_t i : expected) {
                remaining.erase(i);
            }
        }
        if (!remaining.empty()) {
            return {false, fmt("population %.0f not fully ranked", trial)};
        }
    }
    return {true, "200 populations, fronts identical"};
}

double dp_oracle(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<std::vector<double>> d(a.size() + 1, std::vector<double>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i) {
        d[i][0] = double(i);
    }
    for (std::size_t j = 0; j <= b.size(); ++j) {
        d[0][j] = double(j);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double diff = std::abs(a[i - 1] - b[j - 1]);
            const double sub = std::min(diff, 2 * std::numbers::pi - diff) / std::numbers::pi;
            d[i][j] = std::min({d[i - 1][j - 1] + sub, d[i - 1][j] + 1.0, d[i][j - 1] + 1.0});
        }
    }
    return d[a.size()][b.size()];
}

Outcome distance_oracles() {
    core::Rng rng(31);
    int road_mismatch = 0;
    for (int t = 0; t < 100; ++t) {
        const auto a = road::catmull_rom_interpolate(road::generate_seed_road(rng));
        const auto b = road::catmull_rom_interpolate(road::generate_seed_road(rng));
        if (road::road_distance(a, b) != dp_oracle(road::road_tokens(a), road::road_tokens(b))) {
            ++road_mismatch;
        }
    }
    std::uniform_int_distribution<int> px(0, 255);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        digit::RasterImage a;
        digit::RasterImage b;
        for (std::size_t i = 0; i < digit::pixel_count; ++i) {
            a.pixels[i] = static_cast<std::uint8_t>(px(rng));
            b.pixels[i] = static_cast<std::uint8_t>(px(rng));
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < digit::pixel_count; ++i) {
            sum += (double(a.pixels[i]) - b.pixels[i]) * (double(a.pixels[i]) - b.pixels[i]);
        }
        worst = std::max(worst, std::abs(digit::pixel_distance(a, b) - std::sqrt(sum)));
    }
    return {road_mismatch == 0 && worst < 1e-9,
            fmt("road mismatches %.0f of 100, pixel max error %.2e", road_mismatch, worst)};
}

Outcome geometry() {
    core::Rng rng(5);
    double worst_pass = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto m = road::generate_seed_road(rng);
        const auto g = road::catmull_rom_interpolate(m, 20);
        for (std::size_t k = 0; k + 3 <= m.control_points.size(); ++k) {
            worst_pass = std::max(worst_pass, road::distance(g.spine[k * 20], m.control_points[k + 1]));
        }
    }
    double worst_circle = 0.0;
    for (double r : {20.0, 50.0, 100.0}) {
        road::RoadModel m;
        const auto n = static_cast<std::size_t>(std::ceil(r * std::numbers::pi / 5.0));
        for (std::size_t i = 0; i <= n; ++i) {
            const double a = -std::numbers::pi / 2 + std::numbers::pi * double(i) / double(n);
            m.control_points.push_back({r * std::cos(a), r * std::sin(a)});
        }
        const double got = road::min_curvature_radius(road::catmull_rom_interpolate(m));
        worst_circle = std::max(worst_circle, std::abs(got - r) / r);
    }
    const auto line = road::catmull_rom_interpolate(road::straight_road(8, 17.0, {-60, 3}, 0.0));
    double off_line = 0.0;
    for (const auto& p : line.spine) {
        off_line = std::max(off_line, std::abs(p.y - 3.0));
    }
    const bool straight = off_line < 1e-9 &&
                          road::min_curvature_radius(line) == std::numeric_limits<double>::infinity();
    return {worst_pass < 1e-9 && worst_circle < 0.01 && straight,
            fmt("pass-through %.1e m, circle error %.3f%%, straight offset %.1e m", worst_pass,
                100 * worst_circle, off_line)};
}

Outcome truth_table() {
    const double grid[] = {-2.0, -0.5, -1e-9, 0.0, 1e-9, 0.5, 2.0};
    for (double a : grid) {
        for (double b : grid) {
            const double got = core::fitness_frontier(a, b);
            const bool same_sign = (a > 0 && b > 0) || (a < 0 && b < 0);
            const double expected = same_sign ? a * b : -1.0;
            if (got != expected) {
                return {false, fmt("f(%g, %g) = %g", a, b, got)};
            }
        }
    }
    return {true, "49 sign/zero combinations"};
}

struct CompareSummary {
    double hq_outer = 0.0;
    double lq_outer = 0.0;
    std::size_t hq_valid = 0;
    std::size_t hq_total = 0;
    std::size_t lq_valid = 0;
    std::size_t lq_total = 0;
    std::size_t runs = 0;
    std::size_t empty = 0;
};

CompareSummary run_compare() {
    const auto config = report::default_run_config(report::DomainKind::road);
    const std::size_t runs = 8;
    const auto result = report::compare(config, runs, 1);
    CompareSummary s;
    s.runs = runs;
    std::size_t hq_n = 0;
    std::size_t lq_n = 0;
    for (const auto& r : result.runs) {
        if (r.hq) {
            s.hq_outer += r.hq->radius.outer_radius;
            s.hq_valid += r.hq->validity.valid_count;
            s.hq_total += r.hq->archive_size;
            ++hq_n;
        } else {
            ++s.empty;
        }
        if (r.lq) {
            s.lq_outer += r.lq->radius.outer_radius;
            s.lq_valid += r.lq->validity.valid_count;
            s.lq_total += r.lq->archive_size;
            ++lq_n;
        } else {
            ++s.empty;
        }
    }
    s.hq_outer = hq_n ? s.hq_outer / double(hq_n) : std::nan("");
    s.lq_outer = lq_n ? s.lq_outer / double(lq_n) : std::nan("");
    return s;
}

Outcome determinism() {
    auto config = report::default_run_config(report::DomainKind::road);
    config.search.generations = 15;
    config.search.rng_seed = 42;
    const auto a = report::explore(config, {false, 1});
    const auto b = report::explore(config, {false, 1});
    const auto c = report::explore(config, {false, 4});
    auto digit = report::default_run_config(report::DomainKind::digit);
    digit.search.popsize = 20;
    digit.search.generations = 20;
    digit.search.rng_seed = 42;
    const auto d = report::explore(digit, {false, 1});
    const auto e = report::explore(digit, {false, 4});
    const bool road_same = report::serialize_without_timing(a.document) ==
                               report::serialize_without_timing(b.document) &&
                           report::serialize_without_timing(a.document) ==
                               report::serialize_without_timing(c.document);
    const bool digit_same =
        report::serialize_without_timing(d.document) == report::serialize_without_timing(e.document);
    return {road_same && digit_same,
            std::string("road 1/1/4 threads ") + (road_same ? "identical" : "differ") +
                ", digit 1/4 threads " + (digit_same ? "identical" : "differ")};
}

double arc_eval(double radius, core::Preset preset) {
    const auto m = road::arc_road(radius, std::numbers::pi / 2);
    return drive::lane_eval(drive::simulate_drive(m, drive::quality_preset(preset)), m.lane_width);
}

Outcome simulator() {
    const auto straight = road::straight_road(10, 20.0, {-90, 0});
    double straight_error = 0.0;
    for (auto p : {core::Preset::hq, core::Preset::lq}) {
        const double e = drive::lane_eval(drive::simulate_drive(straight, drive::quality_preset(p)),
                                          straight.lane_width);
        straight_error = std::max(straight_error, std::abs(e - straight.lane_width / 2));
    }
    // Once the car leaves the lane the trace stops, so the ladder is checked
    // up to and including the first failing rung.
    const std::vector<double> ladder{60, 45, 35, 28, 24, 20, 16, 12, 10, 8, 6, 5, 4};
    bool monotone = true;
    std::set<double> failed[2];
    for (auto p : {core::Preset::hq, core::Preset::lq}) {
        double previous = std::numeric_limits<double>::infinity();
        bool failed_already = false;
        for (double r : ladder) {
            const double e = arc_eval(r, p);
            if (!failed_already && e > previous) {
                monotone = false;
            }
            if (e < 0.0) {
                failed_already = true;
                failed[int(p)].insert(r);
            }
            previous = e;
        }
    }
    const bool superset =
        std::includes(failed[1].begin(), failed[1].end(), failed[0].begin(), failed[0].end()) &&
        failed[1].size() > failed[0].size();
    return {straight_error < 1e-3 && monotone && superset,
            fmt("straight error %.1e, failing rungs HQ %.0f LQ %.0f", straight_error,
                double(failed[0].size()), double(failed[1].size())) +
                (monotone ? ", monotone" : ", not monotone")};
}

} // namespace

int main() {
    check("archive soundness (digit)", [] {
        auto config = report::default_run_config(report::DomainKind::digit);
        config.search.popsize = 25;
        config.search.generations = 150;
        config.search.rng_seed = 1;
        return soundness(report::make_digit_domain(config, config.preset), config.search, 60.0);
    });
    check("archive soundness (road)", [] {
        auto config = report::default_run_config(report::DomainKind::road);
        config.search.popsize = 12;
        config.search.generations = 40;
        config.search.rng_seed = 1;
        return soundness(report::make_road_domain(config, config.preset), config.search, 180.0);
    });
    check("oracle: non-dominated sort", sort_oracle);
    check("oracle: road and pixel dist", distance_oracles);
    check("geometry", geometry);
    check("frontier fitness truth table", truth_table);

    const auto start = std::chrono::steady_clock::now();
    CompareSummary s;
    bool compared = false;
    std::string compare_error;
    try {
        s = run_compare();
        compared = true;
    } catch (const std::exception& e) {
        compare_error = e.what();
    }
    const double compare_time = seconds_since(start);
    check("outer radius HQ > LQ", [&] {
        if (!compared) {
            return Outcome{false, "compare failed: " + compare_error};
        }
        return Outcome{s.empty == 0 && s.hq_outer > s.lq_outer,
                       fmt("mean outer HQ %.3f, LQ %.3f", s.hq_outer, s.lq_outer) +
                           fmt(" over %.0f paired runs (%.0f s)", double(s.runs), compare_time)};
    });
    check("valid fraction LQ > HQ", [&] {
        if (!compared) {
            return Outcome{false, "compare failed: " + compare_error};
        }
        const double hq = s.hq_total ? double(s.hq_valid) / double(s.hq_total) : 0.0;
        const double lq = s.lq_total ? double(s.lq_valid) / double(s.lq_total) : 0.0;
        std::ostringstream d;
        d << "HQ " << s.hq_valid << " of " << s.hq_total << ", LQ " << s.lq_valid << " of "
          << s.lq_total << " outer roads >= 47 ft";
        return Outcome{lq > hq, d.str()};
    });
    check("determinism", determinism);
    check("simulator sanity", simulator);

    std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
