#include "frontier/digit/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace frontier::digit {

CentroidClassifier::CentroidClassifier(
    std::array<std::array<double, pixel_count>, class_count> centroids, double temperature)
    : centroids_(centroids), temperature_(temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw DigitError("classifier temperature must be positive");
    }
}

double CentroidClassifier::distance_to(const RasterImage& image, int label) const {
    const auto& c = centroid(label);
    double sum = 0.0;
    for (std::size_t i = 0; i < pixel_count; ++i) {
        const double d = static_cast<double>(image.pixels[i]) - c[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

Confidences CentroidClassifier::confidences(const RasterImage& image) const {
    Confidences logits{};
    for (int c = 0; c < class_count; ++c) {
        logits[static_cast<std::size_t>(c)] = -distance_to(image, c) / temperature_;
    }
    const double top = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    for (double& l : logits) {
        l = std::exp(l - top);
        total += l;
    }
    for (double& l : logits) {
        l /= total;
    }
    return logits;
}

int CentroidClassifier::predict(const RasterImage& image) const {
    const auto conf = confidences(image);
    return static_cast<int>(std::max_element(conf.begin(), conf.end()) - conf.begin());
}

CentroidClassifier build_classifier(const std::vector<LabelledImage>& samples, double temperature) {
    std::array<std::array<double, pixel_count>, class_count> sums{};
    std::array<std::size_t, class_count> counts{};
    for (const auto& s : samples) {
        if (s.label < 0 || s.label >= class_count) {
            throw DigitError("sample label " + std::to_string(s.label) + " outside 0..9");
        }
        auto& sum = sums[static_cast<std::size_t>(s.label)];
        for (std::size_t i = 0; i < pixel_count; ++i) {
            sum[i] += s.image.pixels[i];
        }
        ++counts[static_cast<std::size_t>(s.label)];
    }
    for (std::size_t c = 0; c < class_count; ++c) {
        if (counts[c] == 0) {
            throw DigitError("no training sample for class " + std::to_string(c));
        }
        for (double& v : sums[c]) {
            v /= static_cast<double>(counts[c]);
        }
    }
    return CentroidClassifier(sums, temperature);
}

std::vector<LabelledImage> training_subset(const std::vector<LabelledImage>& samples,
                                           core::Preset preset) {
    if (preset == core::Preset::hq) {
        return samples;
    }
    std::vector<LabelledImage> out;
    std::array<bool, class_count> taken{};
    for (const auto& s : samples) {
        if (s.label >= 0 && s.label < class_count && !taken[static_cast<std::size_t>(s.label)]) {
            taken[static_cast<std::size_t>(s.label)] = true;
            out.push_back(s);
        }
    }
    return out;
}

std::vector<LabelledImage> rasterize_all(const std::vector<DigitModel>& models,
                                         const RasterOptions& options) {
    std::vector<LabelledImage> out;
    out.reserve(models.size());
    for (const auto& m : models) {
        out.push_back({rasterize(m, options), m.expected_label});
    }
    return out;
}

double classify_margin(const RasterImage& image, const CentroidClassifier& clf, int expected) {
    if (expected < 0 || expected >= class_count) {
        throw DigitError("expected label " + std::to_string(expected) + " outside 0..9");
    }
    const auto conf = clf.confidences(image);
    double other = 0.0;
    for (int c = 0; c < class_count; ++c) {
        if (c != expected) {
            other = std::max(other, conf[static_cast<std::size_t>(c)]);
        }
    }
    return conf[static_cast<std::size_t>(expected)] - other;
}

double accuracy(const CentroidClassifier& clf, const std::vector<LabelledImage>& samples) {
    if (samples.empty()) {
        return 0.0;
    }
    std::size_t hits = 0;
    for (const auto& s : samples) {
        hits += clf.predict(s.image) == s.label ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

std::vector<DigitModel> load_seeds(const std::string& path, const CentroidClassifier& clf,
                                   int expected_label, const RasterOptions& options,
                                   std::ostream* warnings) {
    std::vector<DigitModel> seeds;
    const auto models = load_models(path);
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto& m = models[i];
        const double margin = classify_margin(rasterize(m, options), clf, expected_label);
        if (m.expected_label == expected_label && margin > 0.0) {
            seeds.push_back(m);
        } else if (warnings != nullptr) {
            *warnings << "warning: skipping seed " << i << " of " << path << " (label "
                      << m.expected_label << ", margin " << margin << ")\n";
        }
    }
    return seeds;
}

} // namespace frontier::digit
