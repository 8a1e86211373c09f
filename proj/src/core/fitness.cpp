#include "frontier/core/fitness.hpp"

namespace frontier::core {

double fitness_frontier(double eval1, double eval2) {
    const double product = eval1 * eval2;
    return product > 0.0 ? product : -1.0;
}

bool at_frontier(double eval1, double eval2) {
    return (eval1 > 0.0 && eval2 < 0.0) || (eval1 < 0.0 && eval2 > 0.0);
}

double quality(double sparseness, double pair_distance, double k) {
    return sparseness - k * pair_distance;
}

} // namespace frontier::core
