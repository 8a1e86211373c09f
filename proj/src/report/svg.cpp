#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "frontier/report/frontier.hpp"

namespace frontier::report {

namespace fs = std::filesystem;
using road::Vec2;

std::string entry_file_name(std::size_t index, double f2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "entry_%03zu_f2_%g.svg", index, f2);
    return buf;
}

namespace {

constexpr double panel = 400.0;
constexpr double margin = 12.0;
constexpr double header = 28.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Maps world coordinates (y up) into a square panel.
struct Frame {
    double min_x;
    double min_y;
    double scale;
    double offset_x;
    double extent;

    [[nodiscard]] Vec2 map(Vec2 p) const {
        return {offset_x + margin + (p.x - min_x) * scale,
                header + margin + (extent - (p.y - min_y)) * scale};
    }
};

Frame fit(const std::vector<Vec2>& points, double offset_x, double pad) {
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;
    for (const Vec2& p : points) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    if (points.empty()) {
        lo_x = lo_y = 0.0;
        hi_x = hi_y = 1.0;
    }
    const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1.0}) + 2.0 * pad;
    const double cx = (lo_x + hi_x) / 2.0;
    const double cy = (lo_y + hi_y) / 2.0;
    return {cx - extent / 2.0, cy - extent / 2.0, (panel - 2.0 * margin) / extent, offset_x, extent};
}

void polyline(std::ostream& out, const Frame& f, const std::vector<Vec2>& pts, const char* cls) {
    out << "  <polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 q = f.map(pts[i]);
        out << (i == 0 ? "" : " ") << fmt(q.x) << ',' << fmt(q.y);
    }
    out << "\"/>\n";
}

void open_svg(std::ostream& out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n"
        << "  <style>\n"
        << "    .edge { fill: none; stroke: #444; stroke-width: 1.5; }\n"
        << "    .spine { fill: none; stroke: #aaa; stroke-width: 1; stroke-dasharray: 6 4; }\n"
        << "    .lane { fill: none; stroke: #6a6; stroke-width: 1; }\n"
        << "    .trace { fill: none; stroke: #c33; stroke-width: 1.5; }\n"
        << "    .out-of-bound { fill: none; stroke: #c00; stroke-width: 2.5; }\n"
        << "    .outline { fill: #222; fill-rule: evenodd; stroke: #06c; stroke-width: 0.05; }\n"
        << "    text { font-family: sans-serif; font-size: 13px; }\n"
        << "  </style>\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"white\"/>\n";
}

void title(std::ostream& out, double x, const std::string& text) {
    out << "  <text x=\"" << fmt(x + margin) << "\" y=\"18\">" << text << "</text>\n";
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ReportError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw ReportError("failed writing '" + path.string() + "'");
    }
}

void prepare(const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw ReportError("cannot create output directory '" + out_dir.string() + "'");
    }
}

std::string member_label(const char* name, double eval) {
    return std::string(name) + " eval=" + fmt(eval);
}

void road_panel(std::ostream& out, const drive::RoadInput& input, const drive::RoadDomain& domain,
                double offset_x, const std::string& label) {
    const auto& g = input.geometry;
    const double w = input.model.lane_width;
    // lane_center offsets by half the width it is given: 2w reaches the edges.
    const auto left = drive::lane_center(g, 2.0 * w, drive::LaneSide::left).spine;
    const auto right = drive::lane_center(g, 2.0 * w, drive::LaneSide::right).spine;
    const auto lane = drive::lane_center(g, w, drive::LaneSide::right).spine;
    const auto trace = domain.drive(input);
    std::vector<Vec2> driven;
    driven.reserve(trace.states.size());
    for (const auto& s : trace.states) {
        driven.push_back(s.position);
    }

    std::vector<Vec2> all = left;
    all.insert(all.end(), right.begin(), right.end());
    all.insert(all.end(), driven.begin(), driven.end());
    const Frame f = fit(all, offset_x, w);

    title(out, offset_x, label + " " + std::string(drive::to_string(trace.outcome)));
    out << "  <g class=\"panel\">\n";
    polyline(out, f, left, "edge");
    polyline(out, f, right, "edge");
    polyline(out, f, g.spine, "spine");
    polyline(out, f, lane, "lane");
    polyline(out, f, driven, "trace");
    if (trace.outcome == drive::Outcome::out_of_bound && !driven.empty()) {
        const Vec2 q = f.map(driven.back());
        out << "  <circle class=\"out-of-bound\" cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
            << "\" r=\"7\"/>\n";
    }
    out << "  </g>\n";
}

void digit_outline(std::ostream& out, const digit::DigitModel& model, double offset_x) {
    const double s = (panel - 2.0 * margin) / digit::canvas_size;
    out << "  <g transform=\"translate(" << fmt(offset_x + margin) << ' ' << fmt(header + margin)
        << ") scale(" << fmt(s) << ")\">\n"
        << "    <rect x=\"0\" y=\"0\" width=\"28\" height=\"28\" fill=\"none\" stroke=\"#ccc\" "
           "stroke-width=\"0.05\"/>\n"
        << "    <path class=\"outline\" d=\"" << digit::svg_path_data(model) << "\"/>\n"
        << "  </g>\n";
}

void digit_raster(std::ostream& out, const digit::RasterImage& image, double offset_x) {
    const double s = (panel - 2.0 * margin) / digit::canvas_size;
    out << "  <g transform=\"translate(" << fmt(offset_x + margin) << ' ' << fmt(header + margin)
        << ") scale(" << fmt(s) << ")\">\n"
        << "    <rect x=\"0\" y=\"0\" width=\"28\" height=\"28\" fill=\"black\"/>\n";
    for (int r = 0; r < digit::canvas_size; ++r) {
        for (int c = 0; c < digit::canvas_size; ++c) {
            const int v = image.at(r, c);
            if (v == 0) {
                continue;
            }
            out << "    <rect x=\"" << c << "\" y=\"" << r
                << "\" width=\"1.02\" height=\"1.02\" fill=\"rgb(" << v << ',' << v << ',' << v
                << ")\"/>\n";
        }
    }
    out << "  </g>\n";
}

} // namespace

std::vector<fs::path> render_frontier(const core::Archive<drive::RoadInput>& archive,
                                      const drive::RoadDomain& domain, const fs::path& out_dir) {
    prepare(out_dir);
    std::vector<fs::path> written;
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        const auto& x = archive.entries[i].individual;
        std::ostringstream svg;
        open_svg(svg, 2.0 * panel, panel + header);
        road_panel(svg, x.m1.model, domain, 0.0, member_label("m1", x.m1.eval.value_or(0.0)));
        road_panel(svg, x.m2.model, domain, panel, member_label("m2", x.m2.eval.value_or(0.0)));
        svg << "</svg>\n";
        const fs::path path = out_dir / entry_file_name(i, x.f2);
        write_file(path, svg.str());
        written.push_back(path);
    }
    return written;
}

std::vector<fs::path> render_frontier(const core::Archive<digit::DigitInput>& archive,
                                      const digit::DigitDomain& /*domain*/,
                                      const fs::path& out_dir) {
    prepare(out_dir);
    std::vector<fs::path> written;
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        const auto& x = archive.entries[i].individual;
        std::ostringstream svg;
        open_svg(svg, 4.0 * panel, panel + header);
        title(svg, 0.0, member_label("m1", x.m1.eval.value_or(0.0)));
        digit_outline(svg, x.m1.model.model, 0.0);
        digit_raster(svg, x.m1.model.raster, panel);
        title(svg, 2.0 * panel, member_label("m2", x.m2.eval.value_or(0.0)));
        digit_outline(svg, x.m2.model.model, 2.0 * panel);
        digit_raster(svg, x.m2.model.raster, 3.0 * panel);
        svg << "</svg>\n";
        const fs::path path = out_dir / entry_file_name(i, x.f2);
        write_file(path, svg.str());
        written.push_back(path);
    }
    return written;
}

} // namespace frontier::report
