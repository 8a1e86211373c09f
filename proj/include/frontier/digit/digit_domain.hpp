#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "frontier/core/domain.hpp"
#include "frontier/digit/classifier.hpp"
#include "frontier/digit/digit.hpp"

namespace frontier::digit {

struct DigitInput {
    DigitModel model;
    RasterImage raster;
    bool valid = false;
};

struct DigitDomainOptions {
    std::shared_ptr<const CentroidClassifier> classifier;
    /// Further classifiers every seed must also label correctly, so that
    /// paired runs of different systems can share one seed set.
    std::vector<std::shared_ptr<const CentroidClassifier>> seed_gate;
    /// Candidate seeds, used in order.
    std::vector<DigitModel> seeds;
    /// Reference input for radius measurements.
    DigitModel reference;
    int expected_label = 5;
    RasterOptions raster;
};

/// Vector digits judged by the nearest-centroid classifier.
class DigitDomain {
  public:
    using Model = DigitInput;

    explicit DigitDomain(DigitDomainOptions options);

    [[nodiscard]] const DigitDomainOptions& options() const { return options_; }
    [[nodiscard]] const CentroidClassifier& classifier() const { return *options_.classifier; }

    [[nodiscard]] DigitInput make_input(DigitModel model) const;

    /// The first `count` configured seeds with a positive margin under the
    /// classifier and every gate; the rng is not consumed.
    std::vector<DigitInput> generate_seeds(std::size_t count, core::Rng& rng) const;
    DigitInput mutate(const DigitInput& input, core::Rng& rng, double lower, double upper) const;
    double distance(const DigitInput& a, const DigitInput& b) const;
    double evaluate(const DigitInput& input) const;
    bool is_valid(const DigitInput& input) const { return input.valid; }

    [[nodiscard]] DigitInput reference() const;

    [[nodiscard]] nlohmann::json encode(const DigitInput& input) const;
    [[nodiscard]] DigitInput decode(const nlohmann::json& j) const;

  private:
    DigitDomainOptions options_;
};

static_assert(core::Domain<DigitDomain>);

} // namespace frontier::digit
