#include "frontier/report/run_config.hpp"

#include <fstream>
#include <set>

namespace frontier::report {

namespace fs = std::filesystem;

DomainKind parse_domain(std::string_view name) {
    if (name == "road") {
        return DomainKind::road;
    }
    if (name == "digit") {
        return DomainKind::digit;
    }
    throw ConfigError("unknown domain '" + std::string(name) + "' (expected road or digit)");
}

std::string_view to_string(DomainKind kind) { return kind == DomainKind::road ? "road" : "digit"; }

RunConfig default_run_config(DomainKind kind, const fs::path& data_dir) {
    RunConfig c;
    c.domain = kind;
    c.search = kind == DomainKind::road ? core::SearchConfig::road_defaults()
                                        : core::SearchConfig::digit_defaults();
    c.digit.seeds = (data_dir / "digits" / "seeds.json").string();
    c.digit.train = (data_dir / "digits" / "train.json").string();
    c.digit.templates = (data_dir / "digits" / "templates.json").string();
    return c;
}

nlohmann::json to_json(const RunConfig& c) {
    const auto& s = c.road.seed_roads;
    nlohmann::json road = {
        {"dt", c.road.dt},
        {"max_steps", c.road.max_steps},
        {"resample_step", c.road.resample_step},
        {"max_seed_attempts", c.road.max_seed_attempts},
        {"num_control_points", s.num_control_points},
        {"step", s.step},
        {"max_turn", s.max_turn},
        {"lane_width", s.lane_width},
        {"bbox_side", s.bbox_side},
        {"samples_per_segment", s.samples_per_segment},
    };
    nlohmann::json digit = {
        {"seeds", c.digit.seeds},
        {"train", c.digit.train},
        {"templates", c.digit.templates},
        {"expected_label", c.digit.expected_label},
        {"temperature", c.digit.temperature},
        {"supersample", c.digit.raster.supersample},
        {"flatness", c.digit.raster.flatness},
    };
    return {
        {"domain", to_string(c.domain)},
        {"preset", core::to_string(c.preset)},
        {"search", c.search},
        {"road", std::move(road)},
        {"digit", std::move(digit)},
    };
}

namespace {

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known,
                    const std::string& section) {
    if (!j.is_object()) {
        throw ConfigError("'" + section + "' must be an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in '" + section + "'");
        }
    }
}

template <typename T>
void take(const nlohmann::json& j, const char* key, T& field) {
    if (j.contains(key)) {
        j.at(key).get_to(field);
    }
}

std::string resolve(const std::string& path, const fs::path& base) {
    const fs::path p(path);
    return p.is_absolute() ? p.lexically_normal().string() : (base / p).lexically_normal().string();
}

} // namespace

RunConfig run_config_from_json(const nlohmann::json& j, const fs::path& base_dir) {
    reject_unknown(j, {"domain", "preset", "search", "road", "digit"}, "configuration");
    if (!j.contains("domain")) {
        throw ConfigError("configuration must name a 'domain' (road or digit)");
    }
    try {
        RunConfig c = default_run_config(parse_domain(j.at("domain").get<std::string>()));
        if (j.contains("preset")) {
            try {
                c.preset = core::parse_preset(j.at("preset").get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        if (j.contains("search")) {
            core::from_json(j.at("search"), c.search);
        }
        if (j.contains("road")) {
            const auto& r = j.at("road");
            reject_unknown(r,
                           {"dt", "max_steps", "resample_step", "max_seed_attempts",
                            "num_control_points", "step", "max_turn", "lane_width", "bbox_side",
                            "samples_per_segment"},
                           "road");
            take(r, "dt", c.road.dt);
            take(r, "max_steps", c.road.max_steps);
            take(r, "resample_step", c.road.resample_step);
            take(r, "max_seed_attempts", c.road.max_seed_attempts);
            auto& s = c.road.seed_roads;
            take(r, "num_control_points", s.num_control_points);
            take(r, "step", s.step);
            take(r, "max_turn", s.max_turn);
            take(r, "lane_width", s.lane_width);
            take(r, "bbox_side", s.bbox_side);
            take(r, "samples_per_segment", s.samples_per_segment);
        }
        if (j.contains("digit")) {
            const auto& d = j.at("digit");
            reject_unknown(d,
                           {"seeds", "train", "templates", "expected_label", "temperature",
                            "supersample", "flatness"},
                           "digit");
            if (d.contains("seeds")) {
                c.digit.seeds = resolve(d.at("seeds").get<std::string>(), base_dir);
            }
            if (d.contains("train")) {
                c.digit.train = resolve(d.at("train").get<std::string>(), base_dir);
            }
            if (d.contains("templates")) {
                c.digit.templates = resolve(d.at("templates").get<std::string>(), base_dir);
            }
            take(d, "expected_label", c.digit.expected_label);
            take(d, "temperature", c.digit.temperature);
            take(d, "supersample", c.digit.raster.supersample);
            take(d, "flatness", c.digit.raster.flatness);
        }
        c.search.validate();
        if (!(c.road.dt > 0.0 && c.road.dt <= 0.2)) {
            throw ConfigError("road.dt must lie in (0, 0.2]");
        }
        if (c.road.seed_roads.num_control_points < 4 || !(c.road.seed_roads.step > 0.0) ||
            c.road.seed_roads.samples_per_segment == 0 || !(c.road.resample_step > 0.0)) {
            throw ConfigError("road seed layout out of range");
        }
        if (c.digit.expected_label < 0 || c.digit.expected_label > 9 ||
            !(c.digit.temperature > 0.0) || c.digit.raster.supersample < 1 ||
            !(c.digit.raster.flatness > 0.0)) {
            throw ConfigError("digit settings out of range");
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad configuration value: ") + e.what());
    }
}

RunConfig load_run_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration '" + path.string() + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("cannot parse configuration '" + path.string() + "': " + e.what());
    }
    return run_config_from_json(j, fs::absolute(path).parent_path());
}

} // namespace frontier::report
