#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "frontier/road/road.hpp"

namespace frontier::road {

RoadModel mutate_road(const RoadModel& model, core::Rng& rng, double lower, double upper) {
    RoadModel out = model;
    if (out.control_points.size() < 2) {
        return out;
    }
    std::uniform_int_distribution<std::size_t> pick(1, out.control_points.size() - 1);
    std::uniform_real_distribution<double> magnitude(lower, upper);
    std::uniform_real_distribution<double> direction(0.0, 2.0 * std::numbers::pi);
    const std::size_t index = pick(rng);
    const double r = lower == upper ? lower : magnitude(rng);
    const double theta = direction(rng);
    out.control_points[index] =
        out.control_points[index] + Vec2{r * std::cos(theta), r * std::sin(theta)};
    return out;
}

RoadModel random_walk_road(core::Rng& rng, const SeedRoadOptions& options) {
    RoadModel m;
    m.lane_width = options.lane_width;
    m.bbox_side = options.bbox_side;
    std::uniform_real_distribution<double> initial(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> turn(-options.max_turn, options.max_turn);
    Vec2 p{0.0, 0.0};
    double heading = initial(rng);
    m.control_points.push_back(p);
    for (std::size_t i = 1; i < options.num_control_points; ++i) {
        if (i > 1) {
            heading += turn(rng);
        }
        p = p + Vec2{options.step * std::cos(heading), options.step * std::sin(heading)};
        m.control_points.push_back(p);
    }
    return m;
}

RoadModel generate_seed_road(core::Rng& rng, const SeedRoadOptions& options) {
    if (options.num_control_points < 4) {
        throw RoadError("seed roads need at least 4 control points");
    }
    if (!(options.step > 0.0)) {
        throw RoadError("seed road step must be positive");
    }
    for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        RoadModel m = random_walk_road(rng, options);
        const auto g = catmull_rom_interpolate(m, options.samples_per_segment);
        if (validate_road(m, g)) {
            return m;
        }
    }
    throw RoadError("no valid seed road within " + std::to_string(options.max_attempts) +
                    " attempts");
}

RoadModel straight_road(std::size_t num_control_points, double step, Vec2 origin, double heading,
                        double lane_width, double bbox_side) {
    RoadModel m;
    m.lane_width = lane_width;
    m.bbox_side = bbox_side;
    const Vec2 dir{std::cos(heading), std::sin(heading)};
    for (std::size_t i = 0; i < num_control_points; ++i) {
        m.control_points.push_back(origin + dir * (step * static_cast<double>(i)));
    }
    return m;
}

RoadModel arc_road(double radius, double sweep, double lead_in, double lead_out, double arc_step,
                   double lane_width, double bbox_side) {
    RoadModel m;
    m.lane_width = lane_width;
    m.bbox_side = bbox_side;
    auto& pts = m.control_points;

    const auto lead_count = [&](double length) {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / arc_step)));
    };
    // Lead-in along +x ending at the origin; one extra point in front for
    // the spline.
    const std::size_t in_count = lead_count(lead_in) + 1;
    for (std::size_t i = in_count; i > 0; --i) {
        pts.push_back({-arc_step * static_cast<double>(i), 0.0});
    }
    const double side = sweep >= 0.0 ? 1.0 : -1.0;
    const Vec2 center{0.0, side * radius};
    const double angle_step = arc_step / radius;
    const std::size_t arc_count =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(sweep) / angle_step)));
    const double dtheta = std::abs(sweep) / static_cast<double>(arc_count);
    for (std::size_t i = 0; i <= arc_count; ++i) {
        const double theta = dtheta * static_cast<double>(i);
        // Start at the origin, i.e. at angle -pi/2 (left turn) around the center.
        pts.push_back(center + Vec2{radius * std::sin(theta), -side * radius * std::cos(theta)});
    }
    const double exit_heading = side * std::abs(sweep);
    const Vec2 dir{std::cos(exit_heading), std::sin(exit_heading)};
    const Vec2 end = pts.back();
    const std::size_t out_count = lead_count(lead_out) + 1;
    for (std::size_t i = 1; i <= out_count; ++i) {
        pts.push_back(end + dir * (arc_step * static_cast<double>(i)));
    }

    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const Vec2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const Vec2 shift{-(min_x + max_x) / 2.0, -(min_y + max_y) / 2.0};
    for (Vec2& p : pts) {
        p = p + shift;
    }
    return m;
}

RoadModel reflect_x(const RoadModel& model) {
    RoadModel out = model;
    for (Vec2& p : out.control_points) {
        p.y = -p.y;
    }
    return out;
}

RoadModel rigid_transform(const RoadModel& model, double angle, Vec2 offset) {
    RoadModel out = model;
    for (Vec2& p : out.control_points) {
        p = rotate(p, angle) + offset;
    }
    return out;
}

void to_json(nlohmann::json& j, const RoadModel& m) {
    nlohmann::json points = nlohmann::json::array();
    for (const Vec2& p : m.control_points) {
        points.push_back({p.x, p.y});
    }
    j = nlohmann::json{
        {"control_points", std::move(points)},
        {"lane_width", m.lane_width},
        {"bbox_side", m.bbox_side},
    };
}

void from_json(const nlohmann::json& j, RoadModel& m) {
    try {
        m.control_points.clear();
        for (const auto& p : j.at("control_points")) {
            if (!p.is_array() || p.size() != 2) {
                throw RoadError("control point must be an [x, y] pair");
            }
            m.control_points.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        m.lane_width = j.value("lane_width", 4.0);
        m.bbox_side = j.value("bbox_side", 250.0);
    } catch (const nlohmann::json::exception& e) {
        throw RoadError(std::string("malformed road model: ") + e.what());
    }
}

} // namespace frontier::road
