#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frontier/core/individual.hpp"

namespace frontier::core {

enum class EventKind {
    insert,             ///< frontier candidate added to the archive
    replace,            ///< candidate displaced its nearest archive entry
    discard,            ///< candidate lost the local competition
    mutation_exhausted, ///< no valid, distinct mutant within the retry cap
    zero_eval,          ///< a member evaluated to exactly 0 (never frontier)
};

const char* to_string(EventKind kind);

struct Event {
    EventKind kind = EventKind::insert;
    std::size_t generation = 0;
    MemberId m1 = 0;
    MemberId m2 = 0;
    std::size_t seed_id = 0;
    /// Distance to the nearest archive entry; unset when the archive was empty.
    std::optional<double> nearest_distance;
    std::optional<std::size_t> nearest_slot;
    double pair_distance = 0.0;
    std::optional<double> incumbent_pair_distance;
    std::size_t archive_size_after = 0;
};

/// One line per event, `key=value` fields separated by spaces.
std::string format_event(const Event& e);

class EventLog {
  public:
    void record(Event e) { events_.push_back(std::move(e)); }
    [[nodiscard]] const std::vector<Event>& events() const { return events_; }
    [[nodiscard]] std::size_t count(EventKind kind) const;
    void write(std::ostream& out) const;

  private:
    std::vector<Event> events_;
};

} // namespace frontier::core
