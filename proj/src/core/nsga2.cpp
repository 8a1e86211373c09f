#include "frontier/core/nsga2.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace frontier::core {

namespace {

// Both objectives as minimization targets.
double objective(const Objectives& o, int which) { return which == 0 ? -o.f1 : o.f2; }

} // namespace

bool dominates(const Objectives& a, const Objectives& b) {
    const bool no_worse = a.f1 >= b.f1 && a.f2 <= b.f2;
    const bool better = a.f1 > b.f1 || a.f2 < b.f2;
    return no_worse && better;
}

std::vector<Front> nondominated_sort(std::span<const Objectives> objectives) {
    const std::size_t n = objectives.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<Front> fronts;
    Front current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) {
                continue;
            }
            if (dominates(objectives[p], objectives[q])) {
                dominated_by[p].push_back(q);
            } else if (dominates(objectives[q], objectives[p])) {
                ++domination_count[p];
            }
        }
        if (domination_count[p] == 0) {
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        Front next;
        for (std::size_t p : current) {
            for (std::size_t q : dominated_by[p]) {
                if (--domination_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Objectives> objectives, const Front& front) {
    const std::size_t m = front.size();
    std::vector<double> distance(m, 0.0);
    if (m == 0) {
        return distance;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> order(m);
    for (int which = 0; which < 2; ++which) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objective(objectives[front[a]], which) < objective(objectives[front[b]], which);
        });
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        const double lo = objective(objectives[front[order.front()]], which);
        const double hi = objective(objectives[front[order.back()]], which);
        if (!(hi > lo)) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double prev = objective(objectives[front[order[i - 1]]], which);
            const double next = objective(objectives[front[order[i + 1]]], which);
            distance[order[i]] += (next - prev) / (hi - lo);
        }
    }
    return distance;
}

Ranking rank_and_crowd(std::span<const Objectives> objectives) {
    Ranking r;
    r.rank.assign(objectives.size(), 0);
    r.crowding.assign(objectives.size(), 0.0);
    const auto fronts = nondominated_sort(objectives);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const auto crowd = crowding_distance(objectives, fronts[f]);
        for (std::size_t i = 0; i < fronts[f].size(); ++i) {
            r.rank[fronts[f][i]] = f;
            r.crowding[fronts[f][i]] = crowd[i];
        }
    }
    return r;
}

std::vector<std::size_t> environmental_selection(std::span<const Objectives> objectives,
                                                 std::size_t count, Ranking* ranking) {
    Ranking r = rank_and_crowd(objectives);
    std::vector<std::size_t> order(objectives.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (r.rank[a] != r.rank[b]) {
            return r.rank[a] < r.rank[b];
        }
        return r.crowding[a] > r.crowding[b];
    });
    order.resize(std::min(count, order.size()));
    if (ranking != nullptr) {
        *ranking = std::move(r);
    }
    return order;
}

std::size_t tournament_winner(std::size_t a, std::size_t b, std::span<const std::size_t> rank,
                              std::span<const double> crowding, Rng& rng) {
    if (rank[a] != rank[b]) {
        return rank[a] < rank[b] ? a : b;
    }
    if (crowding[a] != crowding[b]) {
        return crowding[a] > crowding[b] ? a : b;
    }
    return (rng() & 1U) == 0 ? a : b;
}

std::vector<std::size_t> tournament_selection(std::span<const std::size_t> rank,
                                              std::span<const double> crowding, std::size_t count,
                                              Rng& rng) {
    assert(rank.size() == crowding.size());
    const std::size_t n = rank.size();
    std::vector<std::size_t> winners;
    winners.reserve(count);
    if (n == 0) {
        return winners;
    }
    if (n == 1) {
        winners.assign(count, 0);
        return winners;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_other(0, n - 2);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t a = pick(rng);
        std::size_t b = pick_other(rng);
        if (b >= a) {
            ++b;
        }
        winners.push_back(tournament_winner(a, b, rank, crowding, rng));
    }
    return winners;
}

std::vector<std::size_t> most_dominated(std::span<const std::size_t> rank,
                                        std::span<const double> crowding, std::size_t count,
                                        Rng& rng) {
    const std::size_t n = rank.size();
    std::vector<std::uint64_t> key(n);
    for (auto& k : key) {
        k = rng();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) {
            return rank[a] > rank[b];
        }
        if (crowding[a] != crowding[b]) {
            return crowding[a] < crowding[b];
        }
        return key[a] < key[b];
    });
    order.resize(std::min(count, n));
    return order;
}

} // namespace frontier::core
