#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "frontier/drive/road_domain.hpp"
#include "support.hpp"

using namespace frontier;
using namespace frontier::drive;
using core::Preset;

namespace {

const std::vector<double> ladder{60, 45, 35, 28, 24, 20, 16, 12, 10, 8, 6, 5, 4};

double eval_on(const road::RoadModel& m, Preset p, LaneSide side = LaneSide::right) {
    const auto trace = simulate_drive(m, quality_preset(p), default_dt, default_max_steps, side);
    return lane_eval(trace, m.lane_width);
}

road::RoadModel quarter_turn(double radius) { return road::arc_road(radius, std::numbers::pi / 2); }

} // namespace

TEST_SUITE("lane keeper") {
    TEST_CASE("presets") {
        const auto hq = quality_preset(Preset::hq);
        const auto lq = quality_preset(Preset::lq);
        CHECK(hq.lookahead > lq.lookahead);
        CHECK(hq.max_steer_rate > lq.max_steer_rate);
        CHECK(lq.steering_lag > hq.steering_lag);
        CHECK(core::parse_preset("HQ") == Preset::hq);
        CHECK(core::parse_preset("lq") == Preset::lq);
        CHECK_THROWS_AS(core::parse_preset("mq"), std::invalid_argument);
        CHECK(core::to_string(Preset::lq) == "lq");
    }

    TEST_CASE("a straight road is driven on the lane center") {
        const auto m = road::straight_road(10, 20.0, {-90, 0});
        for (Preset p : {Preset::hq, Preset::lq}) {
            const auto trace = simulate_drive(m, quality_preset(p));
            CHECK(trace.outcome == Outcome::completed);
            CHECK(lane_eval(trace, m.lane_width) == doctest::Approx(2.0).epsilon(1e-3 / 2.0));
        }
    }

    TEST_CASE("lane center is offset by half a lane") {
        const auto g = road::catmull_rom_interpolate(road::straight_road(6, 10.0, {-25, 0}));
        const auto right = lane_center(g, 4.0, LaneSide::right);
        const auto left = lane_center(g, 4.0, LaneSide::left);
        for (std::size_t i = 0; i < g.spine.size(); ++i) {
            CHECK(right.spine[i].y == doctest::Approx(-2.0));
            CHECK(left.spine[i].y == doctest::Approx(2.0));
        }
    }

    TEST_CASE("a tight arc separates the presets") {
        const auto m = quarter_turn(15.0);
        const double hq = eval_on(m, Preset::hq);
        const double lq = eval_on(m, Preset::lq);
        CHECK(hq > 0.0);
        CHECK(lq < 0.0);
        const auto trace = simulate_drive(m, quality_preset(Preset::lq));
        CHECK(trace.outcome == Outcome::out_of_bound);
    }

    TEST_CASE("eval does not increase as the radius shrinks, up to the first failure") {
        for (Preset p : {Preset::hq, Preset::lq}) {
            CAPTURE(core::to_string(p));
            double previous = eval_on(quarter_turn(ladder.front()), p);
            for (std::size_t i = 1; i < ladder.size(); ++i) {
                const double e = eval_on(quarter_turn(ladder[i]), p);
                CAPTURE(ladder[i]);
                CHECK(e <= previous + 1e-9);
                previous = e;
                if (e < 0.0) {
                    break;
                }
            }
            CHECK(previous < 0.0);
        }
    }

    TEST_CASE("mirrored roads driven on the mirrored lane give the same eval") {
        for (double r : {12.0, 20.0, 40.0}) {
            for (Preset p : {Preset::hq, Preset::lq}) {
                const auto m = quarter_turn(r);
                const auto mirrored = road::reflect_x(m);
                CHECK(eval_on(m, p) == doctest::Approx(eval_on(mirrored, p, LaneSide::left)).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("bad inputs") {
        const auto m = road::straight_road(10, 20.0, {-90, 0});
        CHECK_THROWS_AS(simulate_drive(m, quality_preset(Preset::hq), 0.0), std::invalid_argument);
        CHECK_THROWS_AS(simulate_drive(m, quality_preset(Preset::hq), 0.25), std::invalid_argument);
        CHECK_NOTHROW(simulate_drive(m, quality_preset(Preset::hq), 0.2));
        const auto outside = road::straight_road(10, 20.0, {0, 0});
        CHECK_THROWS_AS(simulate_drive(outside, quality_preset(Preset::hq)), road::RoadError);
    }
}

TEST_SUITE("road domain") {
    TEST_CASE("a timeout inside the lane evaluates to zero") {
        RoadDomainOptions o;
        o.max_steps = 5;
        const RoadDomain d(o);
        const auto input = d.make_input(road::straight_road(10, 20.0, {-90, 0}));
        REQUIRE(input.valid);
        CHECK(d.drive(input).outcome == Outcome::timeout);
        CHECK(d.evaluate(input) == 0.0);
    }

    TEST_CASE("malformed roads become invalid inputs") {
        const RoadDomain d;
        road::RoadModel m = road::straight_road(3, 10.0);
        CHECK_FALSE(d.make_input(m).valid);
        m = road::straight_road(5, 10.0);
        m.control_points[3].x = std::nan("");
        CHECK_FALSE(d.make_input(m).valid);
    }

    TEST_CASE("seeds are valid and behave under every gate") {
        RoadDomainOptions o;
        o.controller = quality_preset(Preset::lq);
        o.seed_gate.push_back(quality_preset(Preset::hq));
        const RoadDomain d(o);
        core::Rng rng(5);
        const auto seeds = d.generate_seeds(6, rng);
        REQUIRE(seeds.size() == 6);
        for (const auto& s : seeds) {
            CHECK(s.valid);
            CHECK(d.evaluate(s) > 0.0);
            CHECK(d.evaluate_with(s, quality_preset(Preset::hq)) > 0.0);
        }
    }

    TEST_CASE("encode and decode preserve the input") {
        const RoadDomain d;
        core::Rng rng(7);
        const auto s = d.generate_seeds(1, rng).at(0);
        const auto back = d.decode(nlohmann::json::parse(d.encode(s).dump()));
        CHECK(back.model == s.model);
        CHECK(back.tokens == s.tokens);
        CHECK(d.distance(back, s) == 0.0);
        CHECK(d.evaluate(back) == d.evaluate(s));
    }

    TEST_CASE("the reference road is straight and valid") {
        const RoadDomain d;
        const auto r = d.reference();
        CHECK(r.valid);
        for (double t : r.tokens) {
            CHECK(std::abs(t) < 1e-12);
        }
    }
}
