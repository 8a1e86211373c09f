#include <cmath>
#include <string>

#include "frontier/road/road.hpp"

namespace frontier::road {

namespace {

constexpr double centripetal_alpha = 0.5;

double knot_step(Vec2 a, Vec2 b) { return std::pow(distance(a, b), centripetal_alpha); }

Vec2 blend(Vec2 a, Vec2 b, double ta, double tb, double t) {
    return a * ((tb - t) / (tb - ta)) + b * ((t - ta) / (tb - ta));
}

} // namespace

Vec2 barry_goldman_point(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double u) {
    const double t0 = 0.0;
    const double t1 = t0 + knot_step(p0, p1);
    const double t2 = t1 + knot_step(p1, p2);
    const double t3 = t2 + knot_step(p2, p3);
    const double t = t1 + u * (t2 - t1);

    const Vec2 a1 = blend(p0, p1, t0, t1, t);
    const Vec2 a2 = blend(p1, p2, t1, t2, t);
    const Vec2 a3 = blend(p2, p3, t2, t3, t);
    const Vec2 b1 = blend(a1, a2, t0, t2, t);
    const Vec2 b2 = blend(a2, a3, t1, t3, t);
    return blend(b1, b2, t1, t2, t);
}

RoadGeometry geometry_from_polyline(std::vector<Vec2> spine) {
    RoadGeometry g;
    g.spine = std::move(spine);
    g.cumulative_lengths.reserve(g.spine.size());
    double s = 0.0;
    for (std::size_t i = 0; i < g.spine.size(); ++i) {
        if (i > 0) {
            const Vec2 d = g.spine[i] - g.spine[i - 1];
            s += norm(d);
            g.segment_headings.push_back(std::atan2(d.y, d.x));
        }
        g.cumulative_lengths.push_back(s);
    }
    return g;
}

RoadGeometry catmull_rom_interpolate(const RoadModel& model, std::size_t samples_per_segment) {
    const auto& p = model.control_points;
    if (p.size() < 4) {
        throw RoadError("a road needs at least 4 control points, got " + std::to_string(p.size()));
    }
    if (samples_per_segment < 1) {
        throw RoadError("samples_per_segment must be at least 1");
    }
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] == p[i - 1]) {
            throw RoadError("control points " + std::to_string(i - 1) + " and " +
                            std::to_string(i) + " coincide");
        }
    }
    std::vector<Vec2> spine;
    const std::size_t segments = p.size() - 3;
    spine.reserve(segments * samples_per_segment + 1);
    for (std::size_t i = 1; i + 2 < p.size(); ++i) {
        for (std::size_t j = 0; j < samples_per_segment; ++j) {
            const double u = static_cast<double>(j) / static_cast<double>(samples_per_segment);
            spine.push_back(barry_goldman_point(p[i - 1], p[i], p[i + 1], p[i + 2], u));
        }
    }
    spine.push_back(p[p.size() - 2]);
    return geometry_from_polyline(std::move(spine));
}

} // namespace frontier::road
