#include "frontier/drive/road_domain.hpp"

#include <cmath>

namespace frontier::drive {

RoadDomain::RoadDomain(RoadDomainOptions options) : options_(std::move(options)) {}

RoadInput RoadDomain::make_input(road::RoadModel model) const {
    RoadInput input;
    input.model = std::move(model);
    for (const auto& p : input.model.control_points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            return input;
        }
    }
    try {
        input.geometry =
            road::catmull_rom_interpolate(input.model, options_.seed_roads.samples_per_segment);
    } catch (const road::RoadError&) {
        return input;
    }
    input.valid = road::validate_road(input.model, input.geometry);
    input.tokens = road::road_tokens(input.geometry, options_.resample_step);
    return input;
}

std::vector<RoadInput> RoadDomain::generate_seeds(std::size_t count, core::Rng& rng) const {
    std::vector<RoadInput> seeds;
    auto raw = options_.seed_roads;
    raw.max_attempts = 1;
    for (std::size_t attempt = 0; attempt < options_.max_seed_attempts && seeds.size() < count;
         ++attempt) {
        RoadInput candidate = make_input(road::random_walk_road(rng, raw));
        if (!candidate.valid || !(evaluate(candidate) > 0.0)) {
            continue;
        }
        bool gated = true;
        for (const auto& params : options_.seed_gate) {
            gated = gated && evaluate_with(candidate, params) > 0.0;
        }
        if (gated) {
            seeds.push_back(std::move(candidate));
        }
    }
    return seeds;
}

RoadInput RoadDomain::mutate(const RoadInput& input, core::Rng& rng, double lower,
                             double upper) const {
    return make_input(road::mutate_road(input.model, rng, lower, upper));
}

double RoadDomain::distance(const RoadInput& a, const RoadInput& b) const {
    return road::token_edit_distance(a.tokens, b.tokens);
}

double RoadDomain::evaluate_with(const RoadInput& input, const ControllerParams& params) const {
    const auto trace =
        simulate_drive(input.model, input.geometry, params, options_.dt, options_.max_steps);
    const double eval = lane_eval(trace, input.model.lane_width);
    // A timeout without leaving the lane is neither behaviour nor
    // misbehaviour; 0 keeps it off the frontier.
    if (trace.outcome == Outcome::timeout && eval > 0.0) {
        return 0.0;
    }
    return eval;
}

double RoadDomain::evaluate(const RoadInput& input) const {
    return evaluate_with(input, options_.controller);
}

DrivingTrace RoadDomain::drive(const RoadInput& input) const {
    return simulate_drive(input.model, input.geometry, options_.controller, options_.dt,
                          options_.max_steps);
}

RoadInput RoadDomain::reference() const {
    const auto& s = options_.seed_roads;
    const double span = s.step * static_cast<double>(s.num_control_points - 1);
    return make_input(road::straight_road(s.num_control_points, s.step, {-span / 2.0, 0.0}, 0.0,
                                          s.lane_width, s.bbox_side));
}

nlohmann::json RoadDomain::encode(const RoadInput& input) const {
    nlohmann::json j = input.model;
    return j;
}

RoadInput RoadDomain::decode(const nlohmann::json& j) const {
    return make_input(j.get<road::RoadModel>());
}

} // namespace frontier::drive
