#include <fstream>

#include "frontier/report/frontier.hpp"

namespace frontier::report {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::valid:
        return "valid";
    case Verdict::invalid:
        return "invalid";
    case Verdict::undetermined:
        return "undetermined";
    }
    return "undetermined";
}

ValiditySummary validity_summary(const core::Archive<drive::RoadInput>& archive, double threshold) {
    ValiditySummary s;
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        const auto& outer = archive.entries[i].individual.m2.model;
        const double radius = road::min_curvature_radius(outer.geometry);
        const bool ok = radius >= threshold;
        s.verdicts.push_back({i, ok ? Verdict::valid : Verdict::invalid, radius});
        ++(ok ? s.valid_count : s.invalid_count);
    }
    return s;
}

ValiditySummary validity_summary(const core::Archive<digit::DigitInput>& archive,
                                 const digit::DigitDomain& domain) {
    ValiditySummary s;
    const auto reference = domain.reference();
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        const auto& outer = archive.entries[i].individual.m2.model;
        s.verdicts.push_back({i, Verdict::undetermined, domain.distance(outer, reference)});
        ++s.undetermined_count;
    }
    return s;
}

namespace {

nlohmann::json member_json(const ExportedMember& m) {
    return {{"id", m.id}, {"eval", m.eval}, {"model", m.model}};
}

ExportedMember member_from(const nlohmann::json& j) {
    return {j.at("model"), j.at("eval").get<double>(), j.at("id").get<std::uint64_t>()};
}

constexpr const char* format_name = "frontier-archive";

} // namespace

nlohmann::json to_json(const ArchiveDocument& doc) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : doc.entries) {
        entries.push_back({
            {"seed_id", e.seed_id},
            {"generation", e.generation},
            {"f1", e.f1},
            {"f2", e.f2},
            {"m1", member_json(e.m1)},
            {"m2", member_json(e.m2)},
        });
    }
    return {
        {"format", format_name},
        {"version", 1},
        {"domain", to_string(doc.domain)},
        {"archive_threshold", doc.threshold},
        {"run_metadata", doc.run_metadata},
        {"entries", std::move(entries)},
    };
}

ArchiveDocument document_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || j.value("format", "") != format_name) {
            throw ReportError("not a frontier archive document");
        }
        if (j.value("version", 0) != 1) {
            throw ReportError("unsupported archive version " + j.value("version", nlohmann::json()).dump());
        }
        ArchiveDocument doc;
        doc.domain = parse_domain(j.at("domain").get<std::string>());
        doc.threshold = j.at("archive_threshold").get<double>();
        doc.run_metadata = j.value("run_metadata", nlohmann::json::object());
        for (const auto& e : j.at("entries")) {
            doc.entries.push_back({e.at("seed_id").get<std::size_t>(),
                                   e.at("generation").get<std::size_t>(),
                                   member_from(e.at("m1")),
                                   member_from(e.at("m2")),
                                   e.at("f1").get<double>(),
                                   e.at("f2").get<double>()});
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("malformed archive document: ") + e.what());
    } catch (const ConfigError& e) {
        throw ReportError(std::string("malformed archive document: ") + e.what());
    }
}

std::string serialize(const ArchiveDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string serialize_without_timing(const ArchiveDocument& doc) {
    auto j = to_json(doc);
    j["run_metadata"].erase("timing");
    return j.dump(2) + "\n";
}

void export_archive(const ArchiveDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ReportError("cannot write archive '" + path.string() + "'");
    }
    out << serialize(doc);
    if (!out) {
        throw ReportError("failed writing archive '" + path.string() + "'");
    }
}

ArchiveDocument load_archive(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ReportError("cannot open archive '" + path.string() + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ReportError("cannot parse archive '" + path.string() + "': " + e.what());
    }
    return document_from_json(j);
}

} // namespace frontier::report
