#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "frontier/core/domain.hpp"
#include "frontier/road/road.hpp"

namespace testing {

/// Points in the plane; eval is positive inside a disc of `radius`.
struct DiscDomain {
    using Model = std::array<double, 2>;

    double radius = 5.0;
    double seed_spread = 3.0;

    std::vector<Model> generate_seeds(std::size_t count, frontier::core::Rng& rng) const {
        std::uniform_real_distribution<double> u(-seed_spread, seed_spread);
        std::vector<Model> out;
        while (out.size() < count) {
            Model m{u(rng), u(rng)};
            if (evaluate(m) > 0.0) {
                out.push_back(m);
            }
        }
        return out;
    }
    Model mutate(const Model& m, frontier::core::Rng& rng, double lower, double upper) const {
        const double r = std::uniform_real_distribution<double>(lower, upper)(rng);
        const double a = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
        return {m[0] + r * std::cos(a), m[1] + r * std::sin(a)};
    }
    double distance(const Model& a, const Model& b) const {
        return std::hypot(a[0] - b[0], a[1] - b[1]);
    }
    double evaluate(const Model& m) const { return radius - std::hypot(m[0], m[1]); }
    bool is_valid(const Model& m) const { return std::abs(m[0]) < 50.0 && std::abs(m[1]) < 50.0; }
};

static_assert(frontier::core::Domain<DiscDomain>);

/// Control points on a circle of `radius` around the origin, spaced about
/// `spacing` meters apart along an arc of `sweep` radians.
inline frontier::road::RoadModel circle_road(double radius, double sweep = std::numbers::pi,
                                             double spacing = 5.0) {
    frontier::road::RoadModel m;
    const auto n = static_cast<std::size_t>(std::ceil(radius * sweep / spacing));
    for (std::size_t i = 0; i <= n; ++i) {
        const double a = -std::numbers::pi / 2.0 + sweep * static_cast<double>(i) / static_cast<double>(n);
        m.control_points.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return m;
}

inline std::string data_path(const std::string& name) {
    return std::string(FRONTIER_DATA_DIR) + "/" + name;
}

} // namespace testing
