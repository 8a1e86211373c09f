// frontier: explore and analyse behavioural frontiers of the road and digit
// systems.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "frontier/report/explore.hpp"

namespace fs = std::filesystem;
using namespace frontier;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_empty_archive = 3;

struct Common {
    std::string config;
    std::string domain;
    std::string preset;
    std::string archive;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t runs = 1;
    std::size_t threads = 0;
    double threshold_feet = 47.0;
};

report::RunConfig resolve_config(const Common& c, CLI::App* sub) {
    report::RunConfig config;
    if (!c.config.empty()) {
        if (!fs::exists(c.config)) {
            throw ConfigError("configuration file '" + c.config + "' does not exist");
        }
        config = report::load_run_config(c.config);
        if (!c.domain.empty() && report::parse_domain(c.domain) != config.domain) {
            throw ConfigError("--domain " + c.domain + " contradicts the configuration file");
        }
    } else if (!c.domain.empty()) {
        config = report::default_run_config(report::parse_domain(c.domain));
    } else {
        throw ConfigError("give --config PATH or --domain {road, digit}");
    }
    if (!c.preset.empty()) {
        try {
            config.preset = core::parse_preset(c.preset);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (sub->count("--seed") > 0) {
        config.search.rng_seed = c.seed;
    }
    if (c.threads > 0) {
        config.search.eval_threads = c.threads;
    }
    return config;
}

report::ArchiveDocument load(const Common& c) {
    if (c.archive.empty()) {
        throw report::ReportError("--archive PATH is required");
    }
    if (!fs::exists(c.archive)) {
        throw report::ReportError("archive file '" + c.archive + "' does not exist");
    }
    return report::load_archive(c.archive);
}

int run_explore(const Common& c, CLI::App* sub) {
    const auto config = resolve_config(c, sub);
    const fs::path out = c.out.empty() ? fs::path("frontier_out") : fs::path(c.out);
    const auto result = report::explore(config);
    report::write_explore_outputs(result, out);
    const auto& doc = result.document;
    std::cout << "domain " << report::to_string(config.domain) << ", preset "
              << core::to_string(config.preset) << ", rng_seed " << config.search.rng_seed
              << ", generations " << config.search.generations << "\n"
              << "archive: " << doc.entries.size() << " entries -> " << (out / "archive.json").string()
              << "\n"
              << "events: " << (out / "events.log").string() << "\n"
              << std::fixed << std::setprecision(2) << "wall time: " << result.wall_time_seconds
              << " s\n";
    if (doc.entries.empty() && config.search.generations > 0) {
        std::cerr << "frontier: the final archive is empty (no frontier pair found)\n";
        return exit_empty_archive;
    }
    return 0;
}

int run_radius(const Common& c) {
    const auto doc = load(c);
    const auto r = report::document_radius(doc);
    std::cout << std::setprecision(10) << "inner radius: " << r.inner_radius << " ("
              << r.inner_set_size << " members)\n"
              << "outer radius: " << r.outer_radius << " (" << r.outer_set_size << " members)\n"
              << "units: "
              << (doc.domain == report::DomainKind::road ? "road edit distance"
                                                         : "pixel distance (0-255 scale)")
              << "\n";
    return 0;
}

int run_validity(const Common& c) {
    const auto doc = load(c);
    const double threshold = c.threshold_feet * road::feet_to_meters;
    const auto s = report::document_validity(doc, threshold);
    const bool road = doc.domain == report::DomainKind::road;
    if (road) {
        std::cout << "threshold: " << c.threshold_feet << " ft (" << threshold << " m)\n";
    }
    std::cout << "valid: " << s.valid_count << "\ninvalid: " << s.invalid_count
              << "\nundetermined: " << s.undetermined_count << "\n";
    for (const auto& v : s.verdicts) {
        std::cout << "entry " << v.entry << ": " << report::to_string(v.verdict) << " ("
                  << (road ? "min curvature radius " : "distance to reference ")
                  << std::setprecision(6) << v.metric;
        if (road) {
            std::cout << " m = " << v.metric / road::feet_to_meters << " ft";
        }
        std::cout << ")\n";
    }
    return 0;
}

int run_render(const Common& c) {
    const auto doc = load(c);
    const fs::path out = c.out.empty() ? fs::path("frontier_svg") : fs::path(c.out);
    const auto files = report::document_render(doc, out);
    std::cout << files.size() << " SVG files written to " << out.string() << "\n";
    return 0;
}

int run_compare(const Common& c, CLI::App* sub) {
    const auto config = resolve_config(c, sub);
    std::optional<fs::path> out;
    if (!c.out.empty()) {
        out = fs::path(c.out);
    }
    const auto result = report::compare(config, c.runs, config.search.rng_seed,
                                        c.threshold_feet * road::feet_to_meters, out);
    report::print_compare_table(result, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explore the behavioural frontier of a road lane keeper or a digit classifier."};
    app.require_subcommand(1);
    Common c;

    auto* explore = app.add_subcommand("explore", "run a frontier search and export its archive");
    auto* radius = app.add_subcommand("radius", "inner and outer frontier radius of an archive");
    auto* validity = app.add_subcommand("validity", "validity summary of an archive");
    auto* render = app.add_subcommand("render", "one SVG per archive entry");
    auto* compare = app.add_subcommand("compare", "HQ versus LQ exploration runs");

    for (auto* sub : {explore, compare}) {
        sub->add_option("--config", c.config, "run configuration file");
        sub->add_option("--domain", c.domain, "road or digit (defaults when no --config)")
            ->check(CLI::IsMember({"road", "digit"}));
        sub->add_option("--seed", c.seed, "rng seed (first seed for compare)");
        sub->add_option("--threads", c.threads, "evaluation threads");
        sub->add_option("--out", c.out, "output directory");
    }
    explore->add_option("--preset", c.preset, "hq or lq")->check(CLI::IsMember({"hq", "lq", "HQ", "LQ"}));
    compare->add_option("--runs", c.runs, "paired runs")->check(CLI::PositiveNumber);
    compare->add_option("--threshold", c.threshold_feet, "road validity threshold in feet");
    for (auto* sub : {radius, validity, render}) {
        sub->add_option("--archive", c.archive, "exported archive")->required();
    }
    validity->add_option("--threshold", c.threshold_feet, "road validity threshold in feet");
    render->add_option("--out", c.out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (explore->parsed()) {
            return run_explore(c, explore);
        }
        if (radius->parsed()) {
            return run_radius(c);
        }
        if (validity->parsed()) {
            return run_validity(c);
        }
        if (render->parsed()) {
            return run_render(c);
        }
        if (compare->parsed()) {
            return run_compare(c, compare);
        }
    } catch (const std::exception& e) {
        std::cerr << "frontier: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}
