#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace frontier::core {

using MemberId = std::uint64_t;

template <typename Model>
struct Member {
    Model model;
    /// Cached domain evaluation; equals evaluate(model) once set.
    std::optional<double> eval;
    MemberId id = 0;
};

/// A pair of similar inputs: ideally m1 behaves and m2 misbehaves.
template <typename Model>
struct Individual {
    Member<Model> m1;
    Member<Model> m2;
    double f1 = 0.0; ///< quality, maximized
    double f2 = 0.0; ///< closeness to the frontier, minimized
    std::size_t rank = 0;
    double crowding = 0.0;
    std::size_t seed_id = 0;

    [[nodiscard]] bool evaluated() const { return m1.eval.has_value() && m2.eval.has_value(); }
};

template <typename Model>
using Population = std::vector<Individual<Model>>;

/// Hands out run-unique member ids in creation order.
class IdSource {
  public:
    explicit IdSource(MemberId first = 1) : next_(first) {}
    MemberId next() { return next_++; }

  private:
    MemberId next_;
};

} // namespace frontier::core
