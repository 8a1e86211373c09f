#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frontier/report/frontier.hpp"
#include "frontier/report/run_config.hpp"

namespace frontier::report {

/// Road domain for a preset. With `shared_seeds`, seeds must also be driven
/// correctly by the other preset.
drive::RoadDomain make_road_domain(const RunConfig& config, core::Preset preset,
                                   bool shared_seeds = false);
/// Digit domain for a preset. With `shared_seeds`, seeds must also be
/// labelled correctly by the other preset's classifier.
digit::DigitDomain make_digit_domain(const RunConfig& config, core::Preset preset,
                                     bool shared_seeds = false);

struct ExploreOptions {
    bool shared_seeds = false;
    /// Overrides config.search.eval_threads.
    std::optional<std::size_t> eval_threads;
};

struct ExploreResult {
    ArchiveDocument document;
    /// Event log text, one record per line.
    std::string events;
    double wall_time_seconds = 0.0;
};

ExploreResult explore(const RunConfig& config, const ExploreOptions& options = {});

/// Writes archive.json and events.log into `out_dir` (created if needed).
void write_explore_outputs(const ExploreResult& result, const std::filesystem::path& out_dir);

/// The run configuration stored in a document's metadata.
RunConfig document_config(const ArchiveDocument& doc);

RadiusReport document_radius(const ArchiveDocument& doc);
/// `threshold` in meters; ignored for digits.
ValiditySummary document_validity(const ArchiveDocument& doc,
                                  double threshold = road::min_valid_curvature_radius);
std::vector<std::filesystem::path> document_render(const ArchiveDocument& doc,
                                                   const std::filesystem::path& out_dir);

struct PresetRun {
    RadiusReport radius;
    ValiditySummary validity;
    std::size_t archive_size = 0;
};

struct CompareRun {
    std::uint64_t rng_seed = 0;
    /// Unset when the run ended with an empty archive.
    std::optional<PresetRun> hq;
    std::optional<PresetRun> lq;
};

struct CompareResult {
    DomainKind domain = DomainKind::road;
    std::vector<CompareRun> runs;
};

/// For i in [0, runs): explores with the HQ and the LQ preset, both with
/// rng_seed = base_seed + i and one shared seed set. When `out_dir` is set,
/// each run's outputs go to <out_dir>/run_<i>/<preset>.
CompareResult compare(const RunConfig& config, std::size_t runs, std::uint64_t base_seed,
                      double threshold = road::min_valid_curvature_radius,
                      const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                      const ExploreOptions& options = {});

void print_compare_table(const CompareResult& result, std::ostream& out);

} // namespace frontier::report
