#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "frontier/road/road.hpp"

namespace frontier::road {

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double v = cross(b - a, c - a);
    if (v > 0.0) {
        return 1;
    }
    if (v < 0.0) {
        return -1;
    }
    return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool validate_road(const RoadModel& model, const RoadGeometry& geometry) {
    const auto& spine = geometry.spine;
    const double w = model.lane_width;
    if (spine.size() < 2) {
        return false;
    }
    if (!(distance(spine.front(), spine.back()) > w)) {
        return false;
    }

    // The surface extends lane_width on each side of the spine.
    const double limit = model.bbox_side / 2.0 - w;
    for (const Vec2& p : spine) {
        if (!(std::abs(p.x) <= limit && std::abs(p.y) <= limit)) {
            return false;
        }
    }

    const std::size_t segments = spine.size() - 1;
    for (std::size_t i = 0; i < segments; ++i) {
        for (std::size_t j = i + 2; j < segments; ++j) {
            if (segments_intersect(spine[i], spine[i + 1], spine[j], spine[j + 1])) {
                return false;
            }
        }
    }

    // Stretches farther apart along the road than a half turn of radius w
    // must keep their surfaces apart.
    const double min_separation = std::numbers::pi * w;
    const auto& s = geometry.cumulative_lengths;
    for (std::size_t i = 0; i < spine.size(); ++i) {
        for (std::size_t j = i + 1; j < spine.size(); ++j) {
            if (s[j] - s[i] > min_separation && distance(spine[i], spine[j]) < 2.0 * w) {
                return false;
            }
        }
    }
    return true;
}

double min_curvature_radius(const RoadGeometry& geometry, double window_length) {
    const auto& p = geometry.spine;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (p.size() < 3) {
        return inf;
    }
    const double spacing = geometry.length() / static_cast<double>(p.size() - 1);
    std::size_t w = 1;
    if (spacing > 0.0) {
        w = static_cast<std::size_t>(std::lround(window_length / 2.0 / spacing));
    }
    w = std::clamp<std::size_t>(w, 1, (p.size() - 1) / 2);

    double best = inf;
    for (std::size_t i = w; i + w < p.size(); ++i) {
        const Vec2 a = p[i - w];
        const Vec2 b = p[i];
        const Vec2 c = p[i + w];
        const Vec2 u = b - a;
        const Vec2 v = c - b;
        const double twice_area = std::abs(cross(u, v));
        if (twice_area <= 1e-6 * norm(u) * norm(v)) {
            continue;
        }
        const double radius = norm(u) * norm(v) * norm(c - a) / (2.0 * twice_area);
        best = std::min(best, radius);
    }
    return best;
}

} // namespace frontier::road
