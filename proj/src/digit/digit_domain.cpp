#include "frontier/digit/digit_domain.hpp"

namespace frontier::digit {

DigitDomain::DigitDomain(DigitDomainOptions options) : options_(std::move(options)) {
    if (!options_.classifier) {
        throw DigitError("digit domain needs a classifier");
    }
    if (options_.expected_label < 0 || options_.expected_label >= class_count) {
        throw DigitError("expected label outside 0..9");
    }
}

DigitInput DigitDomain::make_input(DigitModel model) const {
    DigitInput input;
    input.model = std::move(model);
    input.valid = digit_model_problem(input.model).empty();
    if (input.valid) {
        input.raster = rasterize(input.model, options_.raster);
    }
    return input;
}

std::vector<DigitInput> DigitDomain::generate_seeds(std::size_t count, core::Rng& /*rng*/) const {
    std::vector<DigitInput> seeds;
    for (const auto& m : options_.seeds) {
        if (seeds.size() >= count) {
            break;
        }
        DigitInput input = make_input(m);
        bool gated = input.valid && evaluate(input) > 0.0;
        for (const auto& gate : options_.seed_gate) {
            gated = gated && classify_margin(input.raster, *gate, options_.expected_label) > 0.0;
        }
        if (gated) {
            seeds.push_back(std::move(input));
        }
    }
    return seeds;
}

DigitInput DigitDomain::mutate(const DigitInput& input, core::Rng& rng, double lower,
                               double upper) const {
    return make_input(mutate_digit(input.model, rng, lower, upper));
}

double DigitDomain::distance(const DigitInput& a, const DigitInput& b) const {
    return pixel_distance(a.raster, b.raster);
}

double DigitDomain::evaluate(const DigitInput& input) const {
    return classify_margin(input.raster, *options_.classifier, options_.expected_label);
}

DigitInput DigitDomain::reference() const { return make_input(options_.reference); }

nlohmann::json DigitDomain::encode(const DigitInput& input) const {
    nlohmann::json j = input.model;
    return j;
}

DigitInput DigitDomain::decode(const nlohmann::json& j) const {
    return make_input(j.get<DigitModel>());
}

} // namespace frontier::digit
