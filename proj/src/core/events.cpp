#include "frontier/core/events.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace frontier::core {

const char* to_string(EventKind kind) {
    switch (kind) {
    case EventKind::insert:
        return "insert";
    case EventKind::replace:
        return "replace";
    case EventKind::discard:
        return "discard";
    case EventKind::mutation_exhausted:
        return "mutation_exhausted";
    case EventKind::zero_eval:
        return "zero_eval";
    }
    return "unknown";
}

std::string format_event(const Event& e) {
    std::ostringstream os;
    os.precision(17);
    os << to_string(e.kind) << " gen=" << e.generation << " m1=" << e.m1 << " m2=" << e.m2
       << " seed=" << e.seed_id;
    if (e.nearest_distance) {
        os << " nearest=" << *e.nearest_distance;
    } else {
        os << " nearest=none";
    }
    if (e.nearest_slot) {
        os << " slot=" << *e.nearest_slot;
    }
    os << " pair=" << e.pair_distance;
    if (e.incumbent_pair_distance) {
        os << " incumbent_pair=" << *e.incumbent_pair_distance;
    }
    os << " size=" << e.archive_size_after;
    return os.str();
}

std::size_t EventLog::count(EventKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        events_.begin(), events_.end(), [kind](const Event& e) { return e.kind == kind; }));
}

void EventLog::write(std::ostream& out) const {
    for (const auto& e : events_) {
        out << format_event(e) << '\n';
    }
}

} // namespace frontier::core
