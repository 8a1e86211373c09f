#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "frontier/core/config.hpp"
#include "frontier/core/preset.hpp"
#include "frontier/digit/digit.hpp"
#include "frontier/drive/lane_keeper.hpp"
#include "frontier/road/road.hpp"

namespace frontier::report {

enum class DomainKind { road, digit };

DomainKind parse_domain(std::string_view name);
std::string_view to_string(DomainKind kind);

struct RoadSettings {
    double dt = drive::default_dt;
    std::size_t max_steps = drive::default_max_steps;
    double resample_step = road::default_resample_step;
    std::size_t max_seed_attempts = 5000;
    road::SeedRoadOptions seed_roads;
};

struct DigitSettings {
    /// Paths are resolved against the configuration file's directory.
    std::string seeds = "data/digits/seeds.json";
    std::string train = "data/digits/train.json";
    std::string templates = "data/digits/templates.json";
    int expected_label = 5;
    double temperature = 200.0;
    digit::RasterOptions raster;
};

/// Everything one exploration run needs.
struct RunConfig {
    DomainKind domain = DomainKind::digit;
    core::Preset preset = core::Preset::hq;
    core::SearchConfig search;
    RoadSettings road;
    DigitSettings digit;
};

/// Published defaults for a domain; digit data paths point into `data_dir`.
RunConfig default_run_config(DomainKind kind,
                             const std::filesystem::path& data_dir = FRONTIER_DATA_DIR);

nlohmann::json to_json(const RunConfig& config);
/// Sections missing from the document keep the defaults of its domain.
/// Relative digit paths are resolved against `base_dir`. Throws ConfigError.
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

} // namespace frontier::report
