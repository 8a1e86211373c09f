#pragma once

#include <algorithm>

#include "frontier/core/domain.hpp"
#include "frontier/core/individual.hpp"

namespace frontier::core {

/// Closeness to the frontier (minimized): the product of the two evals when
/// it is strictly positive, otherwise -1.
double fitness_frontier(double eval1, double eval2);

/// True iff the evals have strictly opposite signs. An eval of exactly 0
/// is never at the frontier.
bool at_frontier(double eval1, double eval2);

/// Quality (maximized) from its parts: sparseness minus k times the
/// within-pair distance.
double quality(double sparseness, double pair_distance, double k);

template <Domain D>
double pair_distance(const Individual<typename D::Model>& x, const D& domain) {
    return domain.distance(x.m1.model, x.m2.model);
}

/// Distance between two individuals under the better of the two member
/// pairings.
template <Domain D>
double individual_distance(const Individual<typename D::Model>& x,
                           const Individual<typename D::Model>& y, const D& domain) {
    const double aligned =
        (domain.distance(x.m1.model, y.m1.model) + domain.distance(x.m2.model, y.m2.model)) / 2.0;
    const double swapped =
        (domain.distance(x.m1.model, y.m2.model) + domain.distance(x.m2.model, y.m1.model)) / 2.0;
    return std::min(aligned, swapped);
}

} // namespace frontier::core
