#include <algorithm>
#include <cmath>
#include <ostream>

#include "frontier/digit/digit.hpp"

namespace frontier::digit {

namespace {

double distance_to_line(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len = road::norm(ab);
    if (len == 0.0) {
        return road::distance(p, a);
    }
    return std::abs(road::cross(ab, p - a)) / len;
}

void flatten_recursive(const Segment& s, double tolerance, int depth, std::vector<Point>& out) {
    const double flat = std::max(distance_to_line(s.c1, s.p0, s.p3), distance_to_line(s.c2, s.p0, s.p3));
    if (flat <= tolerance || depth >= 24) {
        out.push_back(s.p3);
        return;
    }
    // de Casteljau split at t = 1/2.
    const Point ab = road::lerp(s.p0, s.c1, 0.5);
    const Point bc = road::lerp(s.c1, s.c2, 0.5);
    const Point cd = road::lerp(s.c2, s.p3, 0.5);
    const Point abc = road::lerp(ab, bc, 0.5);
    const Point bcd = road::lerp(bc, cd, 0.5);
    const Point mid = road::lerp(abc, bcd, 0.5);
    flatten_recursive({s.p0, ab, abc, mid}, tolerance, depth + 1, out);
    flatten_recursive({mid, bcd, cd, s.p3}, tolerance, depth + 1, out);
}

} // namespace

void flatten_segment(const Segment& s, double tolerance, std::vector<Point>& out) {
    flatten_recursive(s, tolerance, 0, out);
}

std::vector<Point> flatten_subpath(const Subpath& subpath, double tolerance) {
    std::vector<Point> out;
    if (subpath.empty()) {
        return out;
    }
    out.push_back(subpath.front().p0);
    for (const Segment& s : subpath) {
        flatten_segment(s, tolerance, out);
    }
    return out;
}

RasterImage rasterize(const DigitModel& model, const RasterOptions& options) {
    struct Edge {
        Point a;
        Point b;
    };
    std::vector<Edge> edges;
    for (const Subpath& sp : model.subpaths) {
        const auto poly = flatten_subpath(sp, options.flatness);
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            if (poly[i].y != poly[i + 1].y) {
                edges.push_back({poly[i], poly[i + 1]});
            }
        }
        if (poly.size() > 1 && poly.back().y != poly.front().y) {
            edges.push_back({poly.back(), poly.front()});
        }
    }

    const int ss = options.supersample;
    const int columns = canvas_size * ss;
    std::vector<int> coverage(pixel_count, 0);
    std::vector<double> crossings;
    for (int row = 0; row < canvas_size; ++row) {
        for (int i = 0; i < ss; ++i) {
            const double y = row + (i + 0.5) / ss;
            crossings.clear();
            for (const Edge& e : edges) {
                if ((e.a.y <= y) != (e.b.y <= y)) {
                    crossings.push_back(e.a.x + (y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y));
                }
            }
            std::sort(crossings.begin(), crossings.end());
            for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
                // Sample columns g with center (g + 0.5) / ss in [x0, x1).
                const auto column = [&](double x) {
                    return static_cast<int>(std::clamp(std::ceil(x * ss - 0.5), 0.0, double(columns)));
                };
                const int first = column(crossings[k]);
                const int last = column(crossings[k + 1]);
                for (int g = first; g < last; ++g) {
                    ++coverage[static_cast<std::size_t>(row * canvas_size + g / ss)];
                }
            }
        }
    }

    RasterImage image;
    const int samples = ss * ss;
    for (std::size_t p = 0; p < pixel_count; ++p) {
        image.pixels[p] = static_cast<std::uint8_t>((255 * coverage[p] + samples / 2) / samples);
    }
    return image;
}

double pixel_distance(const RasterImage& a, const RasterImage& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pixel_count; ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        sum += d * d;
    }
    return std::sqrt(sum);
}

void write_pgm(const RasterImage& image, std::ostream& out) {
    out << "P2\n" << canvas_size << ' ' << canvas_size << "\n255\n";
    for (int r = 0; r < canvas_size; ++r) {
        for (int c = 0; c < canvas_size; ++c) {
            out << static_cast<int>(image.at(r, c)) << (c + 1 == canvas_size ? '\n' : ' ');
        }
    }
}

} // namespace frontier::digit
