#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "frontier/core/domain.hpp"
#include "frontier/road/vec2.hpp"

namespace frontier::road {

class RoadError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Editable road: the control points of the center-line spline, in meters.
struct RoadModel {
    std::vector<Vec2> control_points;
    double lane_width = 4.0;
    /// Side of the axis-aligned square, centered on the origin, that the
    /// whole road surface must fit in.
    double bbox_side = 250.0;

    bool operator==(const RoadModel&) const = default;
};

/// Interpolated center line of a road.
struct RoadGeometry {
    std::vector<Vec2> spine;
    /// Heading of each spine segment (size spine.size() - 1).
    std::vector<double> segment_headings;
    /// Arc length at each spine point, starting at 0.
    std::vector<double> cumulative_lengths;

    [[nodiscard]] double length() const {
        return cumulative_lengths.empty() ? 0.0 : cumulative_lengths.back();
    }
};

inline constexpr std::size_t default_samples_per_segment = 20;
inline constexpr double default_resample_step = 2.0;
/// 47 ft, the recommended minimum curve radius at 15 mph.
inline constexpr double feet_to_meters = 0.3048;
inline constexpr double min_valid_curvature_radius = 47.0 * feet_to_meters;

/// Point of the centripetal Catmull-Rom segment p1 -> p2 at local parameter
/// u in [0, 1], by the Barry-Goldman pyramid of linear interpolations.
Vec2 barry_goldman_point(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double u);

/// Samples every rendered segment (control points i -> i+1 for
/// 1 <= i <= n-3) at `samples_per_segment` uniform parameter steps, plus the
/// final interior control point. Throws RoadError on fewer than 4 control
/// points or coincident consecutive points.
RoadGeometry catmull_rom_interpolate(const RoadModel& model,
                                     std::size_t samples_per_segment = default_samples_per_segment);

/// Geometry from an explicit polyline (headings and arc lengths derived).
RoadGeometry geometry_from_polyline(std::vector<Vec2> spine);

/// Segment-segment intersection test including touching and collinear overlap.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// Validity of a road in its input domain: distinct start and end, the
/// buffered surface inside the bounding square, no self-intersection and no
/// overlap between distant stretches.
bool validate_road(const RoadModel& model, const RoadGeometry& geometry);

/// Minimum circumradius over spine triples spaced to span about
/// `window_length` meters; +infinity when every triple is collinear.
double min_curvature_radius(const RoadGeometry& geometry, double window_length = 10.0);

/// Resamples the spine at a fixed arc-length step.
std::vector<Vec2> resample(const RoadGeometry& geometry, double step = default_resample_step);

/// Turning angle at each interior point of a polyline, in (-pi, pi].
std::vector<double> turning_angles(std::span<const Vec2> points);

/// Tokens used by the road distance: turning angles of the resampled spine.
std::vector<double> road_tokens(const RoadGeometry& geometry,
                                double step = default_resample_step);

/// Substitution cost between two angle tokens: wrapped angular difference
/// over pi, in [0, 1].
double angle_substitution_cost(double a, double b);

/// Weighted edit distance between token sequences (indel cost 1).
double token_edit_distance(std::span<const double> a, std::span<const double> b);

double road_distance(const RoadGeometry& a, const RoadGeometry& b,
                     double step = default_resample_step);

/// Moves one uniformly chosen control point (never the first) by a vector
/// of length U[lower, upper] in a uniform direction. The result may be
/// invalid; callers retry.
RoadModel mutate_road(const RoadModel& model, core::Rng& rng, double lower, double upper);

struct SeedRoadOptions {
    std::size_t num_control_points = 10;
    double step = 25.0;
    double max_turn = 3.14159265358979323846 / 3.0;
    double lane_width = 4.0;
    double bbox_side = 250.0;
    std::size_t samples_per_segment = default_samples_per_segment;
    std::size_t max_attempts = 10000;
};

/// Random walk of control points from the origin with fixed step and bounded
/// heading change, regenerated until valid. Throws RoadError when the
/// attempt budget runs out.
RoadModel generate_seed_road(core::Rng& rng, const SeedRoadOptions& options = {});

/// One raw random walk, without the validity loop.
RoadModel random_walk_road(core::Rng& rng, const SeedRoadOptions& options);

/// Straight road of `num_control_points` points spaced `step` apart along
/// `heading`, starting at `origin`.
RoadModel straight_road(std::size_t num_control_points, double step, Vec2 origin = {},
                        double heading = 0.0, double lane_width = 4.0, double bbox_side = 250.0);

/// Road with a straight lead-in, a circular arc of `radius` sweeping
/// `sweep` radians to the left (negative sweep turns right), and a straight
/// lead-out. Control points on the arc are spaced by `arc_step` meters.
RoadModel arc_road(double radius, double sweep, double lead_in = 40.0, double lead_out = 40.0,
                   double arc_step = 5.0, double lane_width = 4.0, double bbox_side = 250.0);

RoadModel reflect_x(const RoadModel& model);
RoadModel rigid_transform(const RoadModel& model, double angle, Vec2 offset);

void to_json(nlohmann::json& j, const RoadModel& m);
void from_json(const nlohmann::json& j, RoadModel& m);

} // namespace frontier::road
