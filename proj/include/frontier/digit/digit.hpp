#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontier/core/domain.hpp"
#include "frontier/road/vec2.hpp"

namespace frontier::digit {

using Point = road::Vec2;

class DigitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int canvas_size = 28;
inline constexpr std::size_t pixel_count = 28 * 28;

/// Cubic Bezier segment in canvas units (x right, y down).
struct Segment {
    Point p0;
    Point c1;
    Point c2;
    Point p3;

    bool operator==(const Segment&) const = default;
};

/// Closed outline: each segment ends where the next starts, the last joins
/// the first.
using Subpath = std::vector<Segment>;

struct DigitModel {
    std::vector<Subpath> subpaths;
    int expected_label = 0;

    bool operator==(const DigitModel&) const = default;
};

/// Degree elevation of a quadratic segment.
Segment quadratic_to_cubic(Point p0, Point control, Point p2);

/// Empty string when the model is well formed, otherwise the first problem.
std::string digit_model_problem(const DigitModel& model);
/// Throws DigitError when digit_model_problem is non-empty.
void check_digit_model(const DigitModel& model);

void to_json(nlohmann::json& j, const DigitModel& m);
/// Throws DigitError for schema violations or broken closure.
void from_json(const nlohmann::json& j, DigitModel& m);

std::vector<DigitModel> load_models(const std::string& path);

/// Number of distinct movable points: shared endpoints count once.
std::size_t movable_point_count(const DigitModel& model);

/// Displaces one uniformly chosen movable point by a magnitude uniform in
/// [lower, upper] in a uniform direction. A shared endpoint moves in both
/// segments that meet there.
DigitModel mutate_digit(const DigitModel& model, core::Rng& rng, double lower, double upper);

DigitModel translate(const DigitModel& model, Point offset);

// Rasterization

/// 28 x 28 grayscale image, row-major, row 0 at the top.
struct RasterImage {
    std::array<std::uint8_t, pixel_count> pixels{};

    [[nodiscard]] std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row * canvas_size + col)];
    }
    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row * canvas_size + col)]; }

    bool operator==(const RasterImage&) const = default;
};

struct RasterOptions {
    int supersample = 8;
    double flatness = 0.05;
};

/// Appends the end points of line pieces approximating the segment (not its
/// start point). Every piece lies within `tolerance` of the curve.
void flatten_segment(const Segment& s, double tolerance, std::vector<Point>& out);
std::vector<Point> flatten_subpath(const Subpath& subpath, double tolerance);

/// Even-odd coverage of every pixel, sampled on a regular grid.
RasterImage rasterize(const DigitModel& model, const RasterOptions& options = {});

double pixel_distance(const RasterImage& a, const RasterImage& b);

/// Plain (ASCII) portable graymap.
void write_pgm(const RasterImage& image, std::ostream& out);
/// SVG path data for the outline, e.g. "M x y C ... Z".
std::string svg_path_data(const DigitModel& model);

} // namespace frontier::digit
