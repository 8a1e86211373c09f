#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontier/core/archive.hpp"
#include "frontier/digit/digit_domain.hpp"
#include "frontier/drive/road_domain.hpp"
#include "frontier/report/run_config.hpp"

namespace frontier::report {

/// Raised for unreadable or malformed archive documents and failed writes.
class ReportError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Radius

enum class FrontierSide { inner, outer };

/// Mean domain distance from the reference to m1 (inner) or m2 (outer) of
/// every entry. Throws ReportError for an empty archive.
template <core::Domain D>
double frontier_radius(const core::Archive<typename D::Model>& archive, FrontierSide side,
                       const typename D::Model& reference, const D& domain) {
    if (archive.empty()) {
        throw ReportError("frontier radius of an empty archive");
    }
    double sum = 0.0;
    for (const auto& e : archive.entries) {
        const auto& member = side == FrontierSide::inner ? e.individual.m1 : e.individual.m2;
        sum += domain.distance(member.model, reference);
    }
    return sum / static_cast<double>(archive.size());
}

struct RadiusReport {
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    std::size_t inner_set_size = 0;
    std::size_t outer_set_size = 0;
    nlohmann::json reference;
};

template <core::Domain D>
RadiusReport radius_report(const core::Archive<typename D::Model>& archive,
                           const typename D::Model& reference, const D& domain) {
    RadiusReport r;
    r.inner_radius = frontier_radius(archive, FrontierSide::inner, reference, domain);
    r.outer_radius = frontier_radius(archive, FrontierSide::outer, reference, domain);
    r.inner_set_size = archive.size();
    r.outer_set_size = archive.size();
    r.reference = domain.encode(reference);
    return r;
}

// Validity

enum class Verdict { valid, invalid, undetermined };
std::string_view to_string(Verdict v);

struct EntryVerdict {
    std::size_t entry = 0;
    Verdict verdict = Verdict::undetermined;
    /// Minimum curvature radius in meters (roads) or pixel distance of the
    /// outer member to the reference (digits).
    double metric = 0.0;
};

struct ValiditySummary {
    std::size_t valid_count = 0;
    std::size_t invalid_count = 0;
    std::size_t undetermined_count = 0;
    std::vector<EntryVerdict> verdicts;
};

/// Outer road valid iff its minimum curvature radius is at least
/// `threshold` meters.
ValiditySummary validity_summary(const core::Archive<drive::RoadInput>& archive,
                                 double threshold = road::min_valid_curvature_radius);
/// Digit validity needs human judgment: every entry is undetermined, with
/// the outer member's distance to the reference attached for triage.
ValiditySummary validity_summary(const core::Archive<digit::DigitInput>& archive,
                                 const digit::DigitDomain& domain);

// Export

struct ExportedMember {
    nlohmann::json model;
    double eval = 0.0;
    std::uint64_t id = 0;
};

struct ExportedEntry {
    std::size_t seed_id = 0;
    std::size_t generation = 0;
    ExportedMember m1;
    ExportedMember m2;
    double f1 = 0.0;
    double f2 = 0.0;
};

struct ArchiveDocument {
    DomainKind domain = DomainKind::road;
    double threshold = 0.0;
    /// Configuration, rng seed, generation count, event counts and a
    /// separate `timing` object (wall time, timestamp).
    nlohmann::json run_metadata = nlohmann::json::object();
    std::vector<ExportedEntry> entries;
};

template <core::Domain D>
ArchiveDocument make_document(const core::Archive<typename D::Model>& archive, const D& domain,
                              DomainKind kind, nlohmann::json run_metadata) {
    ArchiveDocument doc;
    doc.domain = kind;
    doc.threshold = archive.threshold;
    doc.run_metadata = std::move(run_metadata);
    for (const auto& e : archive.entries) {
        const auto& x = e.individual;
        if (!x.m1.eval || !x.m2.eval) {
            throw ReportError("archive entry without evaluations");
        }
        doc.entries.push_back({x.seed_id,
                               e.generation,
                               {domain.encode(x.m1.model), *x.m1.eval, x.m1.id},
                               {domain.encode(x.m2.model), *x.m2.eval, x.m2.id},
                               x.f1,
                               x.f2});
    }
    return doc;
}

template <core::Domain D>
core::Archive<typename D::Model> decode_archive(const ArchiveDocument& doc, const D& domain) {
    using Model = typename D::Model;
    core::Archive<Model> archive;
    archive.threshold = doc.threshold;
    for (const auto& e : doc.entries) {
        core::Individual<Model> x;
        x.m1 = core::Member<Model>{domain.decode(e.m1.model), e.m1.eval, e.m1.id};
        x.m2 = core::Member<Model>{domain.decode(e.m2.model), e.m2.eval, e.m2.id};
        x.f1 = e.f1;
        x.f2 = e.f2;
        x.seed_id = e.seed_id;
        archive.entries.push_back({std::move(x), e.generation});
    }
    return archive;
}

nlohmann::json to_json(const ArchiveDocument& doc);
ArchiveDocument document_from_json(const nlohmann::json& j);

/// The document text as written by export_archive.
std::string serialize(const ArchiveDocument& doc);
/// Same, without the run_metadata.timing object.
std::string serialize_without_timing(const ArchiveDocument& doc);

void export_archive(const ArchiveDocument& doc, const std::filesystem::path& path);
ArchiveDocument load_archive(const std::filesystem::path& path);

// Rendering

/// One SVG per entry, both members side by side; returns the written paths.
std::vector<std::filesystem::path> render_frontier(const core::Archive<drive::RoadInput>& archive,
                                                   const drive::RoadDomain& domain,
                                                   const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> render_frontier(const core::Archive<digit::DigitInput>& archive,
                                                   const digit::DigitDomain& domain,
                                                   const std::filesystem::path& out_dir);

/// "entry_<index>_f2_<f2>.svg"
std::string entry_file_name(std::size_t index, double f2);

} // namespace frontier::report
