#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "frontier/core/domain.hpp"
#include "frontier/drive/lane_keeper.hpp"
#include "frontier/road/road.hpp"

namespace frontier::drive {

/// A road together with its concretized forms.
struct RoadInput {
    road::RoadModel model;
    road::RoadGeometry geometry;
    std::vector<double> tokens;
    bool valid = false;
};

struct RoadDomainOptions {
    ControllerParams controller = quality_preset(Preset::hq);
    /// Further controllers every seed must also drive correctly, so that
    /// paired runs of different systems can share one seed set.
    std::vector<ControllerParams> seed_gate;
    road::SeedRoadOptions seed_roads;
    double dt = default_dt;
    std::size_t max_steps = default_max_steps;
    double resample_step = road::default_resample_step;
    /// Raw seed roads tried before seed generation gives up.
    std::size_t max_seed_attempts = 5000;
};

/// Roads driven by the pure-pursuit lane keeper.
class RoadDomain {
  public:
    using Model = RoadInput;

    explicit RoadDomain(RoadDomainOptions options = {});

    [[nodiscard]] const RoadDomainOptions& options() const { return options_; }

    /// Interpolates and tokenizes; never throws for malformed control points
    /// (the result is simply invalid).
    [[nodiscard]] RoadInput make_input(road::RoadModel model) const;

    std::vector<RoadInput> generate_seeds(std::size_t count, core::Rng& rng) const;
    RoadInput mutate(const RoadInput& input, core::Rng& rng, double lower, double upper) const;
    double distance(const RoadInput& a, const RoadInput& b) const;
    double evaluate(const RoadInput& input) const;
    bool is_valid(const RoadInput& input) const { return input.valid; }

    /// Evaluation under an arbitrary controller (seed gating, reports).
    double evaluate_with(const RoadInput& input, const ControllerParams& params) const;
    DrivingTrace drive(const RoadInput& input) const;

    /// Reference input for radius measurements: a straight road with the
    /// seed layout (same point count and spacing).
    [[nodiscard]] RoadInput reference() const;

    [[nodiscard]] nlohmann::json encode(const RoadInput& input) const;
    [[nodiscard]] RoadInput decode(const nlohmann::json& j) const;

  private:
    RoadDomainOptions options_;
};

static_assert(core::Domain<RoadDomain>);

} // namespace frontier::drive
