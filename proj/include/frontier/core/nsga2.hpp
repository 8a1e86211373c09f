#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frontier/core/domain.hpp"

namespace frontier::core {

/// Objective pair of one individual: f1 is maximized, f2 minimized.
struct Objectives {
    double f1 = 0.0;
    double f2 = 0.0;
};

/// a dominates b: no worse on both objectives and strictly better on one.
bool dominates(const Objectives& a, const Objectives& b);

using Front = std::vector<std::size_t>;

/// Fast non-dominated sorting. Fronts hold indices in ascending order; the
/// first front is the non-dominated set.
std::vector<Front> nondominated_sort(std::span<const Objectives> objectives);

/// Crowding distance of each member of `front`, aligned with `front`.
/// Extremes on either objective get +infinity.
std::vector<double> crowding_distance(std::span<const Objectives> objectives, const Front& front);

struct Ranking {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

Ranking rank_and_crowd(std::span<const Objectives> objectives);

/// Environmental selection: whole fronts by ascending rank, the boundary
/// front cut by descending crowding. Returned indices are ordered by
/// (rank, -crowding, index); `ranking` receives the ranks/crowding of the
/// full input.
std::vector<std::size_t> environmental_selection(std::span<const Objectives> objectives,
                                                 std::size_t count, Ranking* ranking = nullptr);

/// Tournament winner between a and b: lower rank, then higher crowding,
/// then a coin drawn from rng.
std::size_t tournament_winner(std::size_t a, std::size_t b, std::span<const std::size_t> rank,
                              std::span<const double> crowding, Rng& rng);

/// `count` binary tournaments between uniformly drawn distinct contestants.
std::vector<std::size_t> tournament_selection(std::span<const std::size_t> rank,
                                              std::span<const double> crowding, std::size_t count,
                                              Rng& rng);

/// The `count` most dominated indices: highest rank first, then lowest
/// crowding, then a random key.
std::vector<std::size_t> most_dominated(std::span<const std::size_t> rank,
                                        std::span<const double> crowding, std::size_t count,
                                        Rng& rng);

} // namespace frontier::core
