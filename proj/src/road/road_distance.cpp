#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "frontier/road/road.hpp"

namespace frontier::road {

std::vector<Vec2> resample(const RoadGeometry& geometry, double step) {
    std::vector<Vec2> out;
    const auto& p = geometry.spine;
    const auto& s = geometry.cumulative_lengths;
    if (p.empty() || !(step > 0.0)) {
        return out;
    }
    const double total = geometry.length();
    std::size_t seg = 0;
    for (std::size_t k = 0;; ++k) {
        const double target = static_cast<double>(k) * step;
        if (target > total) {
            break;
        }
        while (seg + 2 < p.size() && s[seg + 1] < target) {
            ++seg;
        }
        if (p.size() == 1) {
            out.push_back(p.front());
            break;
        }
        const double span = s[seg + 1] - s[seg];
        const double t = span > 0.0 ? std::clamp((target - s[seg]) / span, 0.0, 1.0) : 0.0;
        out.push_back(lerp(p[seg], p[seg + 1], t));
    }
    return out;
}

std::vector<double> turning_angles(std::span<const Vec2> points) {
    std::vector<double> out;
    if (points.size() < 3) {
        return out;
    }
    out.reserve(points.size() - 2);
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {
        const Vec2 in = points[i] - points[i - 1];
        const Vec2 outgoing = points[i + 1] - points[i];
        out.push_back(wrap_angle(std::atan2(outgoing.y, outgoing.x) - std::atan2(in.y, in.x)));
    }
    return out;
}

std::vector<double> road_tokens(const RoadGeometry& geometry, double step) {
    const auto samples = resample(geometry, step);
    return turning_angles(samples);
}

double angle_substitution_cost(double a, double b) {
    const double diff = std::abs(a - b);
    const double wrapped = std::min(diff, 2.0 * std::numbers::pi - diff);
    return std::clamp(wrapped / std::numbers::pi, 0.0, 1.0);
}

double token_edit_distance(std::span<const double> a, std::span<const double> b) {
    std::vector<double> prev(b.size() + 1);
    std::vector<double> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        prev[j] = static_cast<double>(j);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<double>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double substitute = prev[j - 1] + angle_substitution_cost(a[i - 1], b[j - 1]);
            const double remove = prev[j] + 1.0;
            const double insert = cur[j - 1] + 1.0;
            cur[j] = std::min({substitute, remove, insert});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double road_distance(const RoadGeometry& a, const RoadGeometry& b, double step) {
    const auto ta = road_tokens(a, step);
    const auto tb = road_tokens(b, step);
    return token_edit_distance(ta, tb);
}

} // namespace frontier::road
