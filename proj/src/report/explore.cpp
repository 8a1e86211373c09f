#include "frontier/report/explore.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "frontier/core/search.hpp"

namespace frontier::report {

namespace fs = std::filesystem;

namespace {

core::Preset other(core::Preset p) {
    return p == core::Preset::hq ? core::Preset::lq : core::Preset::hq;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::shared_ptr<const digit::CentroidClassifier>
classifier_for(const std::vector<digit::LabelledImage>& train, const RunConfig& config,
               core::Preset preset) {
    return std::make_shared<const digit::CentroidClassifier>(
        digit::build_classifier(digit::training_subset(train, preset), config.digit.temperature));
}

template <typename F>
auto with_domain(const RunConfig& config, bool shared_seeds, F&& fn) {
    if (config.domain == DomainKind::road) {
        return fn(make_road_domain(config, config.preset, shared_seeds));
    }
    return fn(make_digit_domain(config, config.preset, shared_seeds));
}

} // namespace

drive::RoadDomain make_road_domain(const RunConfig& config, core::Preset preset,
                                   bool shared_seeds) {
    drive::RoadDomainOptions o;
    o.controller = drive::quality_preset(preset);
    if (shared_seeds) {
        o.seed_gate.push_back(drive::quality_preset(other(preset)));
    }
    o.seed_roads = config.road.seed_roads;
    o.dt = config.road.dt;
    o.max_steps = config.road.max_steps;
    o.resample_step = config.road.resample_step;
    o.max_seed_attempts = config.road.max_seed_attempts;
    return drive::RoadDomain(std::move(o));
}

digit::DigitDomain make_digit_domain(const RunConfig& config, core::Preset preset,
                                     bool shared_seeds) {
    const auto& d = config.digit;
    const auto train = digit::rasterize_all(digit::load_models(d.train), d.raster);
    digit::DigitDomainOptions o;
    o.classifier = classifier_for(train, config, preset);
    if (shared_seeds) {
        o.seed_gate.push_back(classifier_for(train, config, other(preset)));
    }
    o.seeds = digit::load_seeds(d.seeds, *o.classifier, d.expected_label, d.raster, nullptr);
    o.expected_label = d.expected_label;
    o.raster = d.raster;
    bool found = false;
    for (auto& t : digit::load_models(d.templates)) {
        if (t.expected_label == d.expected_label) {
            o.reference = std::move(t);
            found = true;
            break;
        }
    }
    if (!found) {
        throw ConfigError("no template for digit " + std::to_string(d.expected_label) + " in '" +
                          d.templates + "'");
    }
    return digit::DigitDomain(std::move(o));
}

ExploreResult explore(const RunConfig& config, const ExploreOptions& options) {
    RunConfig run = config;
    if (options.eval_threads) {
        run.search.eval_threads = *options.eval_threads;
    }
    return with_domain(run, options.shared_seeds, [&](const auto& domain) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = core::run_search(run.search, domain);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        nlohmann::json events = nlohmann::json::object();
        for (auto kind : {core::EventKind::insert, core::EventKind::replace,
                          core::EventKind::discard, core::EventKind::mutation_exhausted,
                          core::EventKind::zero_eval}) {
            events[core::to_string(kind)] = result.log.count(kind);
        }
        nlohmann::json metadata = {
            {"config", to_json(run)},
            {"domain", to_string(run.domain)},
            {"preset", core::to_string(run.preset)},
            {"rng_seed", run.search.rng_seed},
            {"generations", result.generations},
            {"seeds", result.seeds.size()},
            {"shared_seeds", options.shared_seeds},
            {"events", std::move(events)},
            {"timing", {{"wall_time_seconds", wall}, {"timestamp", utc_timestamp()}}},
        };

        ExploreResult out;
        out.document = make_document(result.archive, domain, run.domain, std::move(metadata));
        std::ostringstream log;
        result.log.write(log);
        out.events = log.str();
        out.wall_time_seconds = wall;
        return out;
    });
}

void write_explore_outputs(const ExploreResult& result, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw ReportError("cannot create output directory '" + out_dir.string() + "'");
    }
    export_archive(result.document, out_dir / "archive.json");
    std::ofstream log(out_dir / "events.log", std::ios::binary);
    if (!log) {
        throw ReportError("cannot write '" + (out_dir / "events.log").string() + "'");
    }
    log << result.events;
}

RunConfig document_config(const ArchiveDocument& doc) {
    if (!doc.run_metadata.contains("config")) {
        return default_run_config(doc.domain);
    }
    return run_config_from_json(doc.run_metadata.at("config"), fs::current_path());
}

RadiusReport document_radius(const ArchiveDocument& doc) {
    return with_domain(document_config(doc), false, [&](const auto& domain) {
        return radius_report(decode_archive(doc, domain), domain.reference(), domain);
    });
}

ValiditySummary document_validity(const ArchiveDocument& doc, double threshold) {
    const RunConfig config = document_config(doc);
    if (config.domain == DomainKind::road) {
        const auto domain = make_road_domain(config, config.preset);
        return validity_summary(decode_archive(doc, domain), threshold);
    }
    const auto domain = make_digit_domain(config, config.preset);
    return validity_summary(decode_archive(doc, domain), domain);
}

std::vector<fs::path> document_render(const ArchiveDocument& doc, const fs::path& out_dir) {
    if (doc.entries.empty()) {
        throw ReportError("nothing to render: the archive is empty");
    }
    return with_domain(document_config(doc), false, [&](const auto& domain) {
        return render_frontier(decode_archive(doc, domain), domain, out_dir);
    });
}

CompareResult compare(const RunConfig& config, std::size_t runs, std::uint64_t base_seed,
                      double threshold, const std::optional<fs::path>& out_dir,
                      const ExploreOptions& options) {
    CompareResult result;
    result.domain = config.domain;
    ExploreOptions shared = options;
    shared.shared_seeds = true;
    for (std::size_t i = 0; i < runs; ++i) {
        CompareRun row;
        row.rng_seed = base_seed + i;
        for (auto preset : {core::Preset::hq, core::Preset::lq}) {
            RunConfig cfg = config;
            cfg.preset = preset;
            cfg.search.rng_seed = row.rng_seed;
            const auto explored = explore(cfg, shared);
            if (out_dir) {
                write_explore_outputs(explored, *out_dir / ("run_" + std::to_string(i)) /
                                                    std::string(core::to_string(preset)));
            }
            std::optional<PresetRun> summary;
            if (!explored.document.entries.empty()) {
                summary = PresetRun{document_radius(explored.document),
                                    document_validity(explored.document, threshold),
                                    explored.document.entries.size()};
            }
            (preset == core::Preset::hq ? row.hq : row.lq) = std::move(summary);
        }
        result.runs.push_back(std::move(row));
    }
    return result;
}

namespace {

struct Stats {
    double mean = 0.0;
    double sd = 0.0;
    std::size_t n = 0;
};

Stats stats(const std::vector<double>& xs) {
    Stats s;
    s.n = xs.size();
    if (xs.empty()) {
        return s;
    }
    for (double x : xs) {
        s.mean += x;
    }
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::string cell(const Stats& s) {
    if (s.n == 0) {
        return "n/a";
    }
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << s.mean << " +- " << s.sd;
    return o.str();
}

} // namespace

void print_compare_table(const CompareResult& result, std::ostream& out) {
    const bool road = result.domain == DomainKind::road;
    out << "domain: " << to_string(result.domain) << ", runs: " << result.runs.size() << "\n\n";
    out << std::left << std::setw(8) << "run" << std::setw(8) << "seed" << std::setw(8)
        << "preset" << std::setw(10) << "archive" << std::setw(14) << "inner" << std::setw(14)
        << "outer" << std::setw(8) << "valid" << std::setw(10) << "invalid" << "undetermined\n";
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const auto& r = result.runs[i];
        for (auto preset : {core::Preset::hq, core::Preset::lq}) {
            const auto& p = preset == core::Preset::hq ? r.hq : r.lq;
            out << std::left << std::setw(8) << i << std::setw(8) << r.rng_seed << std::setw(8)
                << core::to_string(preset);
            if (!p) {
                out << "0 (empty archive)\n";
                continue;
            }
            std::ostringstream inner;
            std::ostringstream outer;
            inner << std::fixed << std::setprecision(3) << p->radius.inner_radius;
            outer << std::fixed << std::setprecision(3) << p->radius.outer_radius;
            out << std::setw(10) << p->archive_size << std::setw(14) << inner.str()
                << std::setw(14) << outer.str() << std::setw(8) << p->validity.valid_count
                << std::setw(10) << p->validity.invalid_count << p->validity.undetermined_count
                << "\n";
        }
    }

    out << "\nsummary (mean +- sd over runs with a non-empty archive)\n";
    out << std::left << std::setw(8) << "preset" << std::setw(22) << "archive size"
        << std::setw(22) << "inner radius" << std::setw(22) << "outer radius"
        << (road ? "valid outer roads" : "undetermined entries") << "\n";
    for (auto preset : {core::Preset::hq, core::Preset::lq}) {
        std::vector<double> sizes;
        std::vector<double> inner;
        std::vector<double> outer;
        std::size_t valid = 0;
        std::size_t total = 0;
        std::size_t undetermined = 0;
        for (const auto& r : result.runs) {
            const auto& p = preset == core::Preset::hq ? r.hq : r.lq;
            if (!p) {
                continue;
            }
            sizes.push_back(static_cast<double>(p->archive_size));
            inner.push_back(p->radius.inner_radius);
            outer.push_back(p->radius.outer_radius);
            valid += p->validity.valid_count;
            total += p->archive_size;
            undetermined += p->validity.undetermined_count;
        }
        out << std::left << std::setw(8) << core::to_string(preset) << std::setw(22)
            << cell(stats(sizes)) << std::setw(22) << cell(stats(inner)) << std::setw(22)
            << cell(stats(outer));
        if (road) {
            out << valid << " of " << total << "\n";
        } else {
            out << undetermined << " of " << total << "\n";
        }
    }
}

} // namespace frontier::report
