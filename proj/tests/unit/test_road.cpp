#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "frontier/road/road.hpp"
#include "support.hpp"

using namespace frontier;
using namespace frontier::road;

namespace {

/// Centripetal Catmull-Rom in cubic Hermite form with non-uniform tangents.
Vec2 hermite_point(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double u) {
    const auto knot = [](Vec2 a, Vec2 b) { return std::sqrt(distance(a, b)); };
    const double d0 = knot(p0, p1);
    const double d1 = knot(p1, p2);
    const double d2 = knot(p2, p3);
    const Vec2 m1 = ((p1 - p0) / d0 - (p2 - p0) / (d0 + d1) + (p2 - p1) / d1) * d1;
    const Vec2 m2 = ((p2 - p1) / d1 - (p3 - p1) / (d1 + d2) + (p3 - p2) / d2) * d1;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return p1 * (2 * u3 - 3 * u2 + 1) + m1 * (u3 - 2 * u2 + u) + p2 * (-2 * u3 + 3 * u2) +
           m2 * (u3 - u2);
}

/// Exact test on integer coordinates via parametric solution.
bool oracle_intersect(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                      std::int64_t cx, std::int64_t cy, std::int64_t dx, std::int64_t dy) {
    const std::int64_t rx = bx - ax;
    const std::int64_t ry = by - ay;
    const std::int64_t sx = dx - cx;
    const std::int64_t sy = dy - cy;
    const std::int64_t denom = rx * sy - ry * sx;
    const std::int64_t qx = cx - ax;
    const std::int64_t qy = cy - ay;
    if (denom != 0) {
        std::int64_t t = qx * sy - qy * sx;
        std::int64_t u = qx * ry - qy * rx;
        std::int64_t den = denom;
        if (den < 0) {
            t = -t;
            u = -u;
            den = -den;
        }
        return 0 <= t && t <= den && 0 <= u && u <= den;
    }
    if (qx * ry - qy * rx != 0 || qx * sy - qy * sx != 0) {
        return false; // parallel, distinct lines
    }
    // Collinear: compare projections on the dominant axis of each segment.
    const auto overlap = [](std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1) {
        return std::max(std::min(a0, a1), std::min(b0, b1)) <=
               std::min(std::max(a0, a1), std::max(b0, b1));
    };
    return overlap(ax, bx, cx, dx) && overlap(ay, by, cy, dy);
}

double oracle_edit_distance(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<std::vector<double>> d(a.size() + 1, std::vector<double>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i) {
        d[i][0] = static_cast<double>(i);
    }
    for (std::size_t j = 0; j <= b.size(); ++j) {
        d[0][j] = static_cast<double>(j);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double diff = std::abs(a[i - 1] - b[j - 1]);
            const double sub = std::min(diff, 2 * std::numbers::pi - diff) / std::numbers::pi;
            d[i][j] = std::min({d[i - 1][j - 1] + sub, d[i - 1][j] + 1.0, d[i][j - 1] + 1.0});
        }
    }
    return d[a.size()][b.size()];
}

std::vector<double> random_tokens(core::Rng& rng) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> t(n);
    for (double& x : t) {
        x = angle(rng);
    }
    return t;
}

RoadModel random_valid_road(core::Rng& rng) {
    return generate_seed_road(rng);
}

} // namespace

TEST_SUITE("interpolation") {
    TEST_CASE("Barry-Goldman matches the Hermite form") {
        core::Rng rng(17);
        std::uniform_real_distribution<double> coord(-50.0, 50.0);
        for (int trial = 0; trial < 500; ++trial) {
            const Vec2 p0{coord(rng), coord(rng)};
            const Vec2 p1{coord(rng), coord(rng)};
            const Vec2 p2{coord(rng), coord(rng)};
            const Vec2 p3{coord(rng), coord(rng)};
            for (double u = 0.0; u <= 1.0; u += 0.125) {
                const Vec2 a = barry_goldman_point(p0, p1, p2, p3, u);
                const Vec2 b = hermite_point(p0, p1, p2, p3, u);
                CHECK(distance(a, b) < 1e-9 * std::max(1.0, norm(b)));
            }
        }
    }

    TEST_CASE("the spine passes through every interior control point") {
        core::Rng rng(4);
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = random_valid_road(rng);
            const auto g = catmull_rom_interpolate(m, 20);
            const auto& p = m.control_points;
            REQUIRE(g.spine.size() == (p.size() - 3) * 20 + 1);
            for (std::size_t k = 0; k + 3 <= p.size(); ++k) {
                CHECK(distance(g.spine[k * 20], p[k + 1]) < 1e-9);
            }
            CHECK(g.spine.front() == p[1]);
            CHECK(g.spine.back() == p[p.size() - 2]);
        }
    }

    TEST_CASE("headings and arc lengths follow the polyline") {
        const auto g = geometry_from_polyline({{0, 0}, {3, 4}, {3, 10}});
        REQUIRE(g.cumulative_lengths.size() == 3);
        CHECK(g.cumulative_lengths[1] == doctest::Approx(5.0));
        CHECK(g.length() == doctest::Approx(11.0));
        REQUIRE(g.segment_headings.size() == 2);
        CHECK(g.segment_headings[1] == doctest::Approx(std::numbers::pi / 2));
    }

    TEST_CASE("collinear control points give a straight spine") {
        const auto m = straight_road(8, 17.0, {-60, 3}, 0.0);
        const auto g = catmull_rom_interpolate(m);
        for (const auto& p : g.spine) {
            CHECK(std::abs(p.y - 3.0) < 1e-12);
        }
        CHECK(min_curvature_radius(g) == std::numeric_limits<double>::infinity());
    }

    TEST_CASE("malformed control points are rejected") {
        CHECK_THROWS_AS(catmull_rom_interpolate(straight_road(3, 10.0)), RoadError);
        RoadModel m = straight_road(5, 10.0);
        m.control_points[2] = m.control_points[1];
        CHECK_THROWS_AS(catmull_rom_interpolate(m), RoadError);
    }
}

TEST_SUITE("curvature") {
    TEST_CASE("circle radius is recovered within one percent") {
        for (double r : {20.0, 50.0, 100.0}) {
            const auto g = catmull_rom_interpolate(testing::circle_road(r));
            const double got = min_curvature_radius(g);
            CHECK(std::abs(got - r) / r < 0.01);
        }
    }

    TEST_CASE("arc roads report about their arc radius") {
        for (double r : {15.0, 30.0}) {
            const auto m = arc_road(r, std::numbers::pi / 2);
            const auto g = catmull_rom_interpolate(m);
            CHECK(validate_road(m, g));
            // The spline tightens slightly where the arc meets the straights.
            const double got = min_curvature_radius(g);
            CHECK(got <= r * 1.01);
            CHECK(got > r * 0.95);
        }
    }
}

TEST_SUITE("validity") {
    TEST_CASE("segment intersection agrees with an exact oracle") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> c(-3, 3);
        int hits = 0;
        for (int trial = 0; trial < 20000; ++trial) {
            const int v[8] = {c(rng), c(rng), c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)};
            const bool expected = oracle_intersect(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
            const bool got = segments_intersect({double(v[0]), double(v[1])}, {double(v[2]), double(v[3])},
                                                {double(v[4]), double(v[5])}, {double(v[6]), double(v[7])});
            CHECK(got == expected);
            hits += expected ? 1 : 0;
        }
        CHECK(hits > 1000);
    }

    TEST_CASE("straight and gentle roads are valid") {
        const auto s = straight_road(10, 20.0, {-90, 0});
        CHECK(validate_road(s, catmull_rom_interpolate(s)));
        core::Rng rng(1);
        for (int i = 0; i < 20; ++i) {
            const auto m = generate_seed_road(rng);
            CHECK(validate_road(m, catmull_rom_interpolate(m)));
        }
    }

    TEST_CASE("roads leaving the bounding square are invalid") {
        const auto s = straight_road(10, 20.0, {0, 0});
        CHECK_FALSE(validate_road(s, catmull_rom_interpolate(s)));
        auto wide = s;
        wide.bbox_side = 500.0;
        CHECK(validate_road(wide, catmull_rom_interpolate(wide)));
    }

    TEST_CASE("self-intersecting roads are invalid") {
        RoadModel m;
        m.control_points = {{-40, 0}, {-20, 0}, {0, 0}, {20, 20}, {40, 0}, {20, -20}, {0, 20}, {-20, 40}};
        CHECK_FALSE(validate_road(m, catmull_rom_interpolate(m)));
    }

    TEST_CASE("a closed loop is invalid") {
        auto m = testing::circle_road(30.0, 2.0 * std::numbers::pi);
        m.control_points.push_back(m.control_points[1]);
        m.control_points.push_back(m.control_points[2]);
        CHECK_FALSE(validate_road(m, catmull_rom_interpolate(m)));
    }

    TEST_CASE("distant stretches may not overlap") {
        // A hairpin narrower than two lane widths.
        RoadModel m;
        m.control_points = {{-60, 0}, {-40, 0}, {0, 0}, {20, 3}, {0, 6}, {-40, 6}, {-60, 6}};
        CHECK_FALSE(validate_road(m, catmull_rom_interpolate(m)));
    }
}

TEST_SUITE("distance") {
    TEST_CASE("edit distance matches the full-matrix oracle exactly") {
        core::Rng rng(5);
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = random_tokens(rng);
            const auto b = random_tokens(rng);
            CHECK(token_edit_distance(a, b) == oracle_edit_distance(a, b));
        }
        for (int trial = 0; trial < 30; ++trial) {
            const auto ga = catmull_rom_interpolate(random_valid_road(rng));
            const auto gb = catmull_rom_interpolate(random_valid_road(rng));
            CHECK(road_distance(ga, gb) == oracle_edit_distance(road_tokens(ga), road_tokens(gb)));
        }
    }

    TEST_CASE("edit distance examples") {
        const std::vector<double> empty;
        const std::vector<double> three{0.1, 0.2, 0.3};
        CHECK(token_edit_distance(empty, three) == 3.0);
        CHECK(token_edit_distance(three, three) == 0.0);
        const std::vector<double> flipped{0.1, 0.2 + std::numbers::pi, 0.3};
        CHECK(token_edit_distance(three, flipped) == doctest::Approx(1.0));
        CHECK(angle_substitution_cost(3.0, -3.0) == doctest::Approx((2 * std::numbers::pi - 6.0) / std::numbers::pi));
    }

    TEST_CASE("metric properties on roads and token sequences") {
        core::Rng rng(8);
        std::vector<RoadGeometry> roads;
        for (int i = 0; i < 12; ++i) {
            roads.push_back(catmull_rom_interpolate(random_valid_road(rng)));
        }
        int triples = 0;
        for (std::size_t i = 0; i < roads.size(); ++i) {
            CHECK(road_distance(roads[i], roads[i]) == 0.0);
            for (std::size_t j = 0; j < roads.size(); ++j) {
                const double dij = road_distance(roads[i], roads[j]);
                CHECK(dij == doctest::Approx(road_distance(roads[j], roads[i])).epsilon(1e-12));
                for (std::size_t k = j + 1; k < roads.size() && triples < 150; k += 3) {
                    const double dik = road_distance(roads[i], roads[k]);
                    const double dkj = road_distance(roads[k], roads[j]);
                    CHECK(dij <= dik + dkj + 1e-9);
                    ++triples;
                }
            }
        }
        CHECK(triples >= 100);
        for (int t = 0; t < 500; ++t) {
            const auto a = random_tokens(rng);
            const auto b = random_tokens(rng);
            const auto c = random_tokens(rng);
            CHECK(token_edit_distance(a, b) <= token_edit_distance(a, c) + token_edit_distance(c, b) + 1e-9);
        }
    }

    TEST_CASE("distance is invariant under rigid motion") {
        core::Rng rng(12);
        for (int t = 0; t < 10; ++t) {
            const auto a = random_valid_road(rng);
            const auto b = random_valid_road(rng);
            const auto ga = catmull_rom_interpolate(a);
            const auto gb = catmull_rom_interpolate(b);
            const auto gm = catmull_rom_interpolate(rigid_transform(a, 0.7 * t, {3.0 * t, -2.0}));
            CHECK(road_distance(ga, gm) < 1e-9);
            CHECK(road_distance(gm, gb) == doctest::Approx(road_distance(ga, gb)).epsilon(1e-9));
        }
    }

    TEST_CASE("tokens are turning angles of the resampled spine") {
        const auto g = geometry_from_polyline({{0, 0}, {10, 0}, {10, 10}});
        const auto pts = resample(g, 2.0);
        REQUIRE(pts.size() == 11);
        CHECK(distance(pts[5], Vec2{10, 0}) < 1e-12);
        const auto tokens = road_tokens(g, 2.0);
        REQUIRE(tokens.size() == 9);
        CHECK(tokens[4] == doctest::Approx(std::numbers::pi / 2));
        CHECK(tokens[0] == 0.0);
    }
}

TEST_SUITE("mutation") {
    TEST_CASE("one non-initial point moves by a magnitude within bounds") {
        core::Rng rng(21);
        const auto base = generate_seed_road(rng);
        std::set<std::size_t> moved_indices;
        for (int t = 0; t < 10000; ++t) {
            const auto m = mutate_road(base, rng, 1.0, 6.0);
            REQUIRE(m.control_points.size() == base.control_points.size());
            CHECK(m.control_points[0] == base.control_points[0]);
            std::size_t moved = 0;
            for (std::size_t i = 0; i < m.control_points.size(); ++i) {
                if (!(m.control_points[i] == base.control_points[i])) {
                    ++moved;
                    moved_indices.insert(i);
                    const double r = distance(m.control_points[i], base.control_points[i]);
                    CHECK(r >= 1.0 - 1e-9);
                    CHECK(r <= 6.0 + 1e-9);
                }
            }
            CHECK(moved == 1);
        }
        CHECK(moved_indices.size() == base.control_points.size() - 1);
        CHECK_FALSE(moved_indices.contains(0));
    }

    TEST_CASE("equal bounds move by exactly that distance") {
        core::Rng rng(2);
        const auto base = straight_road(6, 10.0);
        for (int t = 0; t < 100; ++t) {
            const auto m = mutate_road(base, rng, 2.5, 2.5);
            double moved = 0.0;
            for (std::size_t i = 0; i < m.control_points.size(); ++i) {
                moved += distance(m.control_points[i], base.control_points[i]);
            }
            CHECK(moved == doctest::Approx(2.5).epsilon(1e-12));
        }
    }
}

TEST_SUITE("seeds") {
    TEST_CASE("random walks keep a fixed step and a bounded turn") {
        core::Rng rng(31);
        SeedRoadOptions o;
        for (int t = 0; t < 50; ++t) {
            const auto m = random_walk_road(rng, o);
            REQUIRE(m.control_points.size() == o.num_control_points);
            CHECK(m.control_points[0] == Vec2{0, 0});
            const auto turns = turning_angles(m.control_points);
            for (double a : turns) {
                CHECK(std::abs(a) <= o.max_turn + 1e-9);
            }
            for (std::size_t i = 1; i < m.control_points.size(); ++i) {
                CHECK(distance(m.control_points[i], m.control_points[i - 1]) == doctest::Approx(o.step));
            }
        }
    }

    TEST_CASE("impossible seed settings throw") {
        core::Rng rng(1);
        SeedRoadOptions o;
        o.num_control_points = 3;
        CHECK_THROWS_AS(generate_seed_road(rng, o), RoadError);
        o = SeedRoadOptions{};
        o.bbox_side = 20.0;
        o.max_attempts = 20;
        CHECK_THROWS_AS(generate_seed_road(rng, o), RoadError);
    }
}

TEST_SUITE("road json") {
    TEST_CASE("round trip and malformed input") {
        core::Rng rng(3);
        const auto m = generate_seed_road(rng);
        nlohmann::json j = m;
        RoadModel back;
        from_json(nlohmann::json::parse(j.dump()), back);
        CHECK(back == m);
        CHECK_THROWS_AS(from_json(nlohmann::json{{"control_points", {{1, 2, 3}}}}, back), RoadError);
        CHECK_THROWS_AS(from_json(nlohmann::json{{"lane_width", 3}}, back), RoadError);
    }

    TEST_CASE("reflection and rigid motion are exact on control points") {
        const auto m = arc_road(20.0, 1.0);
        const auto r = reflect_x(reflect_x(m));
        CHECK(r == m);
        const auto t = rigid_transform(m, 0.0, {0, 0});
        CHECK(t == m);
    }
}
