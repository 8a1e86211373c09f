#include "frontier/drive/lane_keeper.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace frontier::drive {

using road::RoadGeometry;
using road::RoadModel;

ControllerParams quality_preset(Preset preset) {
    switch (preset) {
    case Preset::hq:
        return ControllerParams{12.0, 6.7, 2.0, 0, 2.7};
    case Preset::lq:
        return ControllerParams{3.0, 9.0, 0.25, 2, 2.7};
    }
    throw std::invalid_argument("unknown preset");
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::completed:
        return "completed";
    case Outcome::out_of_bound:
        return "out_of_bound";
    case Outcome::timeout:
        return "timeout";
    }
    return "unknown";
}

RoadGeometry lane_center(const RoadGeometry& spine, double lane_width, LaneSide side) {
    const auto& p = spine.spine;
    const double offset = (side == LaneSide::right ? -1.0 : 1.0) * lane_width / 2.0;
    std::vector<Vec2> out;
    out.reserve(p.size());
    const auto left_normal = [&](std::size_t seg) {
        const Vec2 d = p[seg + 1] - p[seg];
        const double len = road::norm(d);
        return Vec2{-d.y / len, d.x / len};
    };
    for (std::size_t i = 0; i < p.size(); ++i) {
        Vec2 n;
        if (p.size() < 2) {
            n = {0.0, 0.0};
        } else if (i == 0) {
            n = left_normal(0);
        } else if (i + 1 == p.size()) {
            n = left_normal(i - 1);
        } else {
            const Vec2 a = left_normal(i - 1);
            const Vec2 b = left_normal(i);
            const Vec2 sum = a + b;
            const double len = road::norm(sum);
            // Miter: keep the offset at full distance from both segments.
            const double cos_half = len / 2.0;
            n = len > 0.0 ? sum / len / std::max(cos_half, 0.5) : a;
        }
        out.push_back(p[i] + n * offset);
    }
    return road::geometry_from_polyline(std::move(out));
}

namespace {

struct Projection {
    std::size_t segment = 0;
    double arc = 0.0;
    double distance = 0.0;
};

Projection project_onto(const RoadGeometry& path, Vec2 q, std::size_t segment) {
    const Vec2 a = path.spine[segment];
    const Vec2 b = path.spine[segment + 1];
    const Vec2 ab = b - a;
    const double len2 = road::dot(ab, ab);
    double t = len2 > 0.0 ? road::dot(q - a, ab) / len2 : 0.0;
    // The end segments extend past the path ends.
    const double lo = segment == 0 ? -std::numeric_limits<double>::infinity() : 0.0;
    const double hi = segment + 2 == path.spine.size() ? std::numeric_limits<double>::infinity() : 1.0;
    t = std::clamp(t, lo, hi);
    const Vec2 foot = a + ab * t;
    const double seg_len = path.cumulative_lengths[segment + 1] - path.cumulative_lengths[segment];
    return {segment, path.cumulative_lengths[segment] + t * seg_len, road::distance(q, foot)};
}

/// Nearest point on the path, searched in a window around the previous
/// nearest segment so the car cannot jump to a distant stretch.
Projection nearest_on_path(const RoadGeometry& path, Vec2 q, std::size_t previous,
                           double reach) {
    const std::size_t segments = path.spine.size() - 1;
    const std::size_t first = previous >= 2 ? previous - 2 : 0;
    const double horizon = path.cumulative_lengths[previous] + reach;
    Projection best = project_onto(path, q, first);
    for (std::size_t s = first + 1; s < segments; ++s) {
        if (path.cumulative_lengths[s] > horizon) {
            break;
        }
        const Projection p = project_onto(path, q, s);
        if (p.distance < best.distance) {
            best = p;
        }
    }
    return best;
}

Vec2 point_at_arc(const RoadGeometry& path, double arc, std::size_t hint) {
    const auto& s = path.cumulative_lengths;
    const std::size_t segments = path.spine.size() - 1;
    if (arc >= path.length()) {
        const Vec2 a = path.spine[segments - 1];
        const Vec2 b = path.spine[segments];
        const Vec2 dir = (b - a) / road::norm(b - a);
        return b + dir * (arc - path.length());
    }
    std::size_t seg = std::min(hint, segments - 1);
    while (seg + 1 < segments && s[seg + 1] < arc) {
        ++seg;
    }
    const double span = s[seg + 1] - s[seg];
    const double t = span > 0.0 ? (arc - s[seg]) / span : 0.0;
    return road::lerp(path.spine[seg], path.spine[seg + 1], t);
}

} // namespace

DrivingTrace simulate_drive(const RoadModel& road, const ControllerParams& params, double dt,
                            std::size_t max_steps, LaneSide side) {
    const auto geometry = road::catmull_rom_interpolate(road);
    if (!road::validate_road(road, geometry)) {
        throw road::RoadError("cannot drive an invalid road");
    }
    return simulate_drive(road, geometry, params, dt, max_steps, side);
}

DrivingTrace simulate_drive(const RoadModel& road, const RoadGeometry& geometry,
                            const ControllerParams& params, double dt, std::size_t max_steps,
                            LaneSide side) {
    if (!(dt > 0.0 && dt <= 0.2)) {
        throw std::invalid_argument("dt must lie in (0, 0.2], got " + std::to_string(dt));
    }
    if (geometry.spine.size() < 2) {
        throw road::RoadError("road geometry has no segments");
    }
    const RoadGeometry path = lane_center(geometry, road.lane_width, side);
    const double half_width = road.lane_width / 2.0;
    const double end_arc = path.length();
    const double reach = params.lookahead + params.speed * dt + 5.0;

    DrivingTrace trace;
    trace.dt = dt;
    DriveState state;
    state.position = path.spine.front();
    state.heading = path.segment_headings.front();
    state.steer = 0.0;
    state.lane_distance = 0.0;
    trace.states.push_back(state);

    std::deque<double> pending(params.steering_lag, 0.0);
    std::size_t segment = 0;
    double arc = 0.0;
    trace.outcome = Outcome::timeout;

    for (std::size_t step = 0; step < max_steps; ++step) {
        const Vec2 target = point_at_arc(path, arc + params.lookahead, segment);
        const Vec2 to_target = target - state.position;
        const double c = std::cos(state.heading);
        const double s = std::sin(state.heading);
        const double forward = c * to_target.x + s * to_target.y;
        const double lateral = -s * to_target.x + c * to_target.y;
        const double reach_distance = std::hypot(forward, lateral);
        double command = 0.0;
        if (reach_distance > 0.0) {
            const double alpha = std::atan2(lateral, forward);
            command = std::atan(2.0 * params.wheelbase * std::sin(alpha) / reach_distance);
        }
        pending.push_back(command);
        const double desired = pending.front();
        pending.pop_front();

        const double max_delta = params.max_steer_rate * dt;
        state.steer += std::clamp(desired - state.steer, -max_delta, max_delta);
        state.position =
            state.position + Vec2{c, s} * (params.speed * dt);
        state.heading += params.speed * dt * std::tan(state.steer) / params.wheelbase;

        const auto nearest = nearest_on_path(path, state.position, segment, reach);
        segment = nearest.segment;
        arc = nearest.arc;
        state.lane_distance = nearest.distance;
        trace.states.push_back(state);

        if (state.lane_distance > half_width) {
            trace.outcome = Outcome::out_of_bound;
            break;
        }
        if (arc >= end_arc - 1e-9) {
            trace.outcome = Outcome::completed;
            break;
        }
    }
    return trace;
}

double lane_eval(const DrivingTrace& trace, double lane_width) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : trace.states) {
        best = std::min(best, lane_width / 2.0 - s.lane_distance);
    }
    return best;
}

} // namespace frontier::drive
