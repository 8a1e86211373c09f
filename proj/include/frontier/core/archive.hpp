#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "frontier/core/domain.hpp"
#include "frontier/core/events.hpp"
#include "frontier/core/fitness.hpp"
#include "frontier/core/individual.hpp"

namespace frontier::core {

template <typename Model>
struct ArchiveEntry {
    Individual<Model> individual;
    /// Generation in which this entry was inserted (or last replaced).
    std::size_t generation = 0;
};

/// Non-redundant frontier individuals. Every entry stores the behaving member
/// as m1 (eval > 0) and the misbehaving one as m2 (eval < 0).
template <typename Model>
struct Archive {
    std::vector<ArchiveEntry<Model>> entries;
    double threshold = 0.0;

    [[nodiscard]] bool empty() const { return entries.empty(); }
    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

enum class ArchiveDecision { not_frontier, inserted, replaced, discarded };

/// Quality fitness of x against the archive: sparseness minus k times the
/// within-pair distance. An empty archive contributes `empty_sparseness`.
template <Domain D>
double fitness_quality(const Individual<typename D::Model>& x,
                       const Archive<typename D::Model>& archive, double k, double empty_sparseness,
                       const D& domain) {
    double spars = empty_sparseness;
    if (!archive.empty()) {
        spars = std::numeric_limits<double>::infinity();
        for (const auto& e : archive.entries) {
            spars = std::min(spars, individual_distance(x, e.individual, domain));
        }
    }
    return quality(spars, pair_distance(x, domain), k);
}

/// Swaps members so the behaving one comes first. Requires frontier evals.
template <typename Model>
void canonicalize(Individual<Model>& x) {
    if (*x.m1.eval < 0.0) {
        std::swap(x.m1, x.m2);
    }
}

/// Offers `candidate` to the archive: frontier individuals farther than the
/// threshold from every entry are inserted; otherwise the candidate competes
/// with its nearest entry and the one with the closer members stays.
template <Domain D>
ArchiveDecision update_archive(Archive<typename D::Model>& archive,
                               const Individual<typename D::Model>& candidate, const D& domain,
                               std::size_t generation = 0, EventLog* log = nullptr) {
    if (!candidate.evaluated() || !at_frontier(*candidate.m1.eval, *candidate.m2.eval)) {
        return ArchiveDecision::not_frontier;
    }
    Individual<typename D::Model> x = candidate;
    canonicalize(x);

    Event ev;
    ev.generation = generation;
    ev.m1 = x.m1.id;
    ev.m2 = x.m2.id;
    ev.seed_id = x.seed_id;
    ev.pair_distance = pair_distance(x, domain);

    std::optional<std::size_t> nearest;
    double nearest_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        const double d = individual_distance(x, archive.entries[i].individual, domain);
        if (d < nearest_distance) {
            nearest_distance = d;
            nearest = i;
        }
    }

    ArchiveDecision decision;
    if (!nearest || nearest_distance > archive.threshold) {
        archive.entries.push_back({std::move(x), generation});
        decision = ArchiveDecision::inserted;
        ev.kind = EventKind::insert;
    } else {
        auto& incumbent = archive.entries[*nearest];
        const double incumbent_pair = pair_distance(incumbent.individual, domain);
        ev.incumbent_pair_distance = incumbent_pair;
        if (ev.pair_distance < incumbent_pair) {
            incumbent = {std::move(x), generation};
            decision = ArchiveDecision::replaced;
            ev.kind = EventKind::replace;
        } else {
            decision = ArchiveDecision::discarded;
            ev.kind = EventKind::discard;
        }
    }
    if (nearest) {
        ev.nearest_distance = nearest_distance;
        ev.nearest_slot = nearest;
    }
    ev.archive_size_after = archive.size();
    if (log != nullptr) {
        log->record(ev);
    }
    return decision;
}

} // namespace frontier::core
