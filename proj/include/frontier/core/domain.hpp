#pragma once

#include <concepts>
#include <cstddef>
#include <random>
#include <vector>

namespace frontier::core {

using Rng = std::mt19937_64;

/// What the search needs from an input domain.
///
/// `Model` is opaque to the search; domains typically bundle the editable
/// representation with its concretized form so distances stay cheap.
/// `distance` must be a semimetric and `evaluate` a pure function: positive
/// means the system under test behaved, negative means it misbehaved.
/// `evaluate` and `distance` may be called concurrently on distinct models.
template <typename D>
concept Domain = requires(const D& domain, const typename D::Model& model, Rng& rng,
                          double lower, double upper, std::size_t count) {
    typename D::Model;
    { domain.generate_seeds(count, rng) } -> std::same_as<std::vector<typename D::Model>>;
    { domain.mutate(model, rng, lower, upper) } -> std::same_as<typename D::Model>;
    { domain.distance(model, model) } -> std::convertible_to<double>;
    { domain.evaluate(model) } -> std::convertible_to<double>;
    { domain.is_valid(model) } -> std::convertible_to<bool>;
};

} // namespace frontier::core
