#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "frontier/digit/digit.hpp"

namespace frontier::digit {

Segment quadratic_to_cubic(Point p0, Point control, Point p2) {
    return {p0, p0 + (control - p0) * (2.0 / 3.0), p2 + (control - p2) * (2.0 / 3.0), p2};
}

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string where(std::size_t sub, std::size_t seg) {
    return "subpath " + std::to_string(sub) + " segment " + std::to_string(seg);
}

} // namespace

std::string digit_model_problem(const DigitModel& model) {
    if (model.expected_label < 0 || model.expected_label > 9) {
        return "expected_label " + std::to_string(model.expected_label) + " outside 0..9";
    }
    for (std::size_t i = 0; i < model.subpaths.size(); ++i) {
        const Subpath& sp = model.subpaths[i];
        if (sp.empty()) {
            return "subpath " + std::to_string(i) + " is empty";
        }
        for (std::size_t j = 0; j < sp.size(); ++j) {
            const Segment& s = sp[j];
            if (!finite(s.p0) || !finite(s.c1) || !finite(s.c2) || !finite(s.p3)) {
                return where(i, j) + " has a non-finite coordinate";
            }
            if (!(s.p3 == sp[(j + 1) % sp.size()].p0)) {
                return where(i, j) + " does not end where the next segment starts";
            }
        }
    }
    return {};
}

void check_digit_model(const DigitModel& model) {
    if (auto problem = digit_model_problem(model); !problem.empty()) {
        throw DigitError("invalid digit model: " + problem);
    }
}

void to_json(nlohmann::json& j, const DigitModel& m) {
    nlohmann::json subpaths = nlohmann::json::array();
    for (const Subpath& sp : m.subpaths) {
        nlohmann::json segments = nlohmann::json::array();
        for (const Segment& s : sp) {
            segments.push_back(
                {{s.p0.x, s.p0.y}, {s.c1.x, s.c1.y}, {s.c2.x, s.c2.y}, {s.p3.x, s.p3.y}});
        }
        subpaths.push_back(std::move(segments));
    }
    j = nlohmann::json{{"expected_label", m.expected_label}, {"subpaths", std::move(subpaths)}};
}

void from_json(const nlohmann::json& j, DigitModel& m) {
    const auto point = [](const nlohmann::json& p) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw DigitError("point must be an [x, y] pair of numbers");
        }
        return Point{p[0].get<double>(), p[1].get<double>()};
    };
    if (!j.is_object() || !j.contains("subpaths") || !j.contains("expected_label")) {
        throw DigitError("digit model needs 'expected_label' and 'subpaths'");
    }
    if (!j.at("expected_label").is_number_integer() || !j.at("subpaths").is_array()) {
        throw DigitError("malformed digit model fields");
    }
    m.expected_label = j.at("expected_label").get<int>();
    m.subpaths.clear();
    for (const auto& sp : j.at("subpaths")) {
        if (!sp.is_array()) {
            throw DigitError("subpath must be a list of segments");
        }
        Subpath out;
        for (const auto& seg : sp) {
            if (!seg.is_array() || seg.size() != 4) {
                throw DigitError("segment must list four points");
            }
            out.push_back({point(seg[0]), point(seg[1]), point(seg[2]), point(seg[3])});
        }
        m.subpaths.push_back(std::move(out));
    }
    check_digit_model(m);
}

std::vector<DigitModel> load_models(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DigitError("cannot open digit models '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DigitError("cannot parse '" + path + "': " + e.what());
    }
    if (!j.is_array()) {
        throw DigitError("'" + path + "' must hold a list of digit models");
    }
    std::vector<DigitModel> models;
    for (const auto& entry : j) {
        models.push_back(entry.get<DigitModel>());
    }
    return models;
}

std::size_t movable_point_count(const DigitModel& model) {
    std::size_t n = 0;
    for (const Subpath& sp : model.subpaths) {
        n += 3 * sp.size();
    }
    return n;
}

DigitModel mutate_digit(const DigitModel& model, core::Rng& rng, double lower, double upper) {
    DigitModel out = model;
    const std::size_t total = movable_point_count(out);
    if (total == 0) {
        return out;
    }
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    const double r = lower == upper ? lower : std::uniform_real_distribution<double>(lower, upper)(rng);
    const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    const Point delta{r * std::cos(theta), r * std::sin(theta)};

    // Points of a subpath with n segments: index 3i is the start of segment i
    // (shared with the end of segment i-1), 3i+1 and 3i+2 its controls.
    for (Subpath& sp : out.subpaths) {
        if (pick >= 3 * sp.size()) {
            pick -= 3 * sp.size();
            continue;
        }
        const std::size_t seg = pick / 3;
        switch (pick % 3) {
        case 0: {
            const std::size_t prev = (seg + sp.size() - 1) % sp.size();
            sp[seg].p0 = sp[seg].p0 + delta;
            sp[prev].p3 = sp[seg].p0;
            break;
        }
        case 1:
            sp[seg].c1 = sp[seg].c1 + delta;
            break;
        default:
            sp[seg].c2 = sp[seg].c2 + delta;
            break;
        }
        break;
    }
    return out;
}

DigitModel translate(const DigitModel& model, Point offset) {
    DigitModel out = model;
    for (Subpath& sp : out.subpaths) {
        for (Segment& s : sp) {
            s.p0 = s.p0 + offset;
            s.c1 = s.c1 + offset;
            s.c2 = s.c2 + offset;
            s.p3 = s.p3 + offset;
        }
    }
    return out;
}

std::string svg_path_data(const DigitModel& model) {
    std::ostringstream d;
    d.precision(6);
    for (const Subpath& sp : model.subpaths) {
        if (sp.empty()) {
            continue;
        }
        d << "M " << sp.front().p0.x << ' ' << sp.front().p0.y;
        for (const Segment& s : sp) {
            d << " C " << s.c1.x << ' ' << s.c1.y << ' ' << s.c2.x << ' ' << s.c2.y << ' '
              << s.p3.x << ' ' << s.p3.y;
        }
        d << " Z ";
    }
    std::string out = d.str();
    if (!out.empty()) {
        out.pop_back();
    }
    return out;
}

} // namespace frontier::digit
