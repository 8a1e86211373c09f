#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "frontier/core/preset.hpp"
#include "frontier/road/road.hpp"

namespace frontier::drive {

using road::Vec2;

/// Pure-pursuit controller on a kinematic bicycle.
struct ControllerParams {
    double lookahead = 6.0;      ///< meters of path ahead of the nearest point
    double speed = 6.7;          ///< m/s, constant
    double max_steer_rate = 1.0; ///< rad/s
    std::size_t steering_lag = 0; ///< control steps between command and actuation
    double wheelbase = 2.7;      ///< meters

    bool operator==(const ControllerParams&) const = default;
};

using core::Preset;
using core::parse_preset;
using core::to_string;

/// HQ: long lookahead, moderate speed, no lag. LQ: short lookahead, higher
/// speed, a few steps of actuation lag.
ControllerParams quality_preset(Preset preset);

enum class Outcome { completed, out_of_bound, timeout };
std::string_view to_string(Outcome outcome);

struct DriveState {
    Vec2 position;
    double heading = 0.0;
    double steer = 0.0;
    /// Distance from the driven lane's center line.
    double lane_distance = 0.0;
};

struct DrivingTrace {
    std::vector<DriveState> states;
    double dt = 0.05;
    Outcome outcome = Outcome::timeout;
};

enum class LaneSide { right, left };

inline constexpr double default_dt = 0.05;
inline constexpr std::size_t default_max_steps = 20000;

/// Center line of the lane on `side`, offset lane_width / 2 from the spine.
road::RoadGeometry lane_center(const road::RoadGeometry& spine, double lane_width,
                               LaneSide side = LaneSide::right);

/// Drives the lane from its start, aligned with its first segment, until the
/// path end (completed), the first step farther than lane_width / 2 from the
/// lane center (out_of_bound), or `max_steps`. Throws RoadError for an invalid
/// road and std::invalid_argument for dt outside (0, 0.2].
DrivingTrace simulate_drive(const road::RoadModel& road, const ControllerParams& params,
                            double dt = default_dt, std::size_t max_steps = default_max_steps,
                            LaneSide side = LaneSide::right);

/// Same, on precomputed geometry; the caller vouches for validity.
DrivingTrace simulate_drive(const road::RoadModel& road, const road::RoadGeometry& geometry,
                            const ControllerParams& params, double dt, std::size_t max_steps,
                            LaneSide side = LaneSide::right);

/// min over the trace of (lane_width / 2 - d): positive iff the car never
/// left its lane.
double lane_eval(const DrivingTrace& trace, double lane_width);

} // namespace frontier::drive
