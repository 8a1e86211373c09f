#include "frontier/core/config.hpp"

#include <cmath>

namespace frontier::core {

double SearchConfig::effective_empty_sparseness() const {
    return empty_archive_sparseness.value_or(10.0 * archive_threshold);
}

std::size_t SearchConfig::effective_seed_count() const {
    return seed_count == 0 ? popsize : seed_count;
}

void SearchConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw ConfigError(std::string("invalid search configuration: ") + what);
        }
    };
    require(popsize > 0, "popsize must be positive");
    require(std::isfinite(k) && k >= 0.0, "k must be finite and nonnegative");
    require(std::isfinite(archive_threshold) && archive_threshold >= 0.0,
            "archive_threshold must be finite and nonnegative");
    require(std::isfinite(mutation_lower_bound) && mutation_lower_bound > 0.0,
            "mutation_lower_bound must be positive");
    require(std::isfinite(mutation_upper_bound) && mutation_upper_bound >= mutation_lower_bound,
            "mutation_upper_bound must be >= mutation_lower_bound");
    require(repopulation_upper_bound > 0, "repopulation_upper_bound must be positive");
    require(repopulation_upper_bound <= popsize, "repopulation_upper_bound must not exceed popsize");
    require(mutation_retry_cap > 0, "mutation_retry_cap must be positive");
    require(eval_threads > 0, "eval_threads must be positive");
    if (empty_archive_sparseness) {
        require(std::isfinite(*empty_archive_sparseness) && *empty_archive_sparseness >= 0.0,
                "empty_archive_sparseness must be finite and nonnegative");
    }
}

SearchConfig SearchConfig::digit_defaults() { return SearchConfig{}; }

SearchConfig SearchConfig::road_defaults() {
    SearchConfig c;
    c.popsize = 12;
    c.generations = 100;
    c.k = 0.01;
    c.archive_threshold = 35.0;
    c.mutation_lower_bound = 1.0;
    c.mutation_upper_bound = 6.0;
    c.repopulation_upper_bound = 2;
    return c;
}

void to_json(nlohmann::json& j, const SearchConfig& c) {
    j = nlohmann::json{
        {"popsize", c.popsize},
        {"generations", c.generations},
        {"k", c.k},
        {"archive_threshold", c.archive_threshold},
        {"mutation_lower_bound", c.mutation_lower_bound},
        {"mutation_upper_bound", c.mutation_upper_bound},
        {"repopulation_upper_bound", c.repopulation_upper_bound},
        {"mutation_retry_cap", c.mutation_retry_cap},
        {"rng_seed", c.rng_seed},
        {"seed_count", c.seed_count},
    };
    if (c.empty_archive_sparseness) {
        j["empty_archive_sparseness"] = *c.empty_archive_sparseness;
    } else {
        j["empty_archive_sparseness"] = nullptr;
    }
    // eval_threads is excluded: exports must not depend on thread count.
}

void from_json(const nlohmann::json& j, SearchConfig& c) {
    if (!j.is_object()) {
        throw ConfigError("search configuration must be an object");
    }
    static const char* const known[] = {
        "popsize", "generations", "k", "archive_threshold", "mutation_lower_bound",
        "mutation_upper_bound", "repopulation_upper_bound", "mutation_retry_cap", "rng_seed",
        "empty_archive_sparseness", "seed_count", "eval_threads"};
    for (const auto& [key, value] : j.items()) {
        bool found = false;
        for (const char* name : known) {
            found = found || key == name;
        }
        if (!found) {
            throw ConfigError("unknown search configuration key '" + key + "'");
        }
    }
    try {
        auto take = [&](const char* key, auto& field) {
            if (j.contains(key)) {
                j.at(key).get_to(field);
            }
        };
        take("popsize", c.popsize);
        take("generations", c.generations);
        take("k", c.k);
        take("archive_threshold", c.archive_threshold);
        take("mutation_lower_bound", c.mutation_lower_bound);
        take("mutation_upper_bound", c.mutation_upper_bound);
        take("repopulation_upper_bound", c.repopulation_upper_bound);
        take("mutation_retry_cap", c.mutation_retry_cap);
        take("rng_seed", c.rng_seed);
        take("seed_count", c.seed_count);
        take("eval_threads", c.eval_threads);
        if (j.contains("empty_archive_sparseness")) {
            const auto& v = j.at("empty_archive_sparseness");
            if (v.is_null()) {
                c.empty_archive_sparseness.reset();
            } else {
                c.empty_archive_sparseness = v.get<double>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad search configuration value: ") + e.what());
    }
}

} // namespace frontier::core
