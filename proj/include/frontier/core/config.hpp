#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace frontier {

/// Raised for malformed or inconsistent user-supplied settings.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when the search cannot proceed (bad seeds, exhausted budgets).
class SearchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace core {

/// Parameters of one frontier exploration run.
///
/// Defaults are the digit settings; use `road_defaults()` for roads.
struct SearchConfig {
    std::size_t popsize = 100;
    std::size_t generations = 4000;
    /// Weight of the within-pair distance in the quality fitness.
    double k = 0.1;
    double archive_threshold = 4.0;
    double mutation_lower_bound = 0.01;
    double mutation_upper_bound = 0.6;
    std::size_t repopulation_upper_bound = 10;
    std::size_t mutation_retry_cap = 50;
    std::uint64_t rng_seed = 0;
    /// Sparseness reported while the archive is empty; unset means 10 * archive_threshold.
    std::optional<double> empty_archive_sparseness;
    /// Number of seeds requested from the domain; 0 means popsize.
    std::size_t seed_count = 0;
    /// Worker threads used for member evaluation and fitness computation.
    std::size_t eval_threads = 1;

    [[nodiscard]] double effective_empty_sparseness() const;
    [[nodiscard]] std::size_t effective_seed_count() const;

    /// Throws ConfigError when a field is out of range.
    void validate() const;

    static SearchConfig digit_defaults();
    static SearchConfig road_defaults();
};

void to_json(nlohmann::json& j, const SearchConfig& c);
/// Missing keys keep the values already present in `c`.
void from_json(const nlohmann::json& j, SearchConfig& c);

} // namespace core
} // namespace frontier
