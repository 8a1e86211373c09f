#pragma once

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "frontier/core/preset.hpp"
#include "frontier/digit/digit.hpp"

namespace frontier::digit {

inline constexpr int class_count = 10;
inline constexpr double default_temperature = 200.0;

struct LabelledImage {
    RasterImage image;
    int label = 0;
};

using Confidences = std::array<double, class_count>;

/// Nearest-centroid classifier with softmax confidences over negative
/// pixel distances.
class CentroidClassifier {
  public:
    CentroidClassifier(std::array<std::array<double, pixel_count>, class_count> centroids,
                       double temperature);

    [[nodiscard]] const std::array<double, pixel_count>& centroid(int label) const {
        return centroids_[static_cast<std::size_t>(label)];
    }
    [[nodiscard]] double temperature() const { return temperature_; }

    [[nodiscard]] double distance_to(const RasterImage& image, int label) const;
    [[nodiscard]] Confidences confidences(const RasterImage& image) const;
    /// Lowest label among the most confident classes.
    [[nodiscard]] int predict(const RasterImage& image) const;

  private:
    std::array<std::array<double, pixel_count>, class_count> centroids_;
    double temperature_;
};

/// Centroid of each class = per-pixel mean of its samples. Throws DigitError
/// when a class has no sample or the temperature is not positive.
CentroidClassifier build_classifier(const std::vector<LabelledImage>& samples,
                                    double temperature = default_temperature);

/// Training subset for a quality preset: every sample for hq, the first
/// sample of each class for lq.
std::vector<LabelledImage> training_subset(const std::vector<LabelledImage>& samples,
                                           core::Preset preset);

std::vector<LabelledImage> rasterize_all(const std::vector<DigitModel>& models,
                                         const RasterOptions& options = {});

/// confidence[expected] minus the largest other confidence, in (-1, 1).
double classify_margin(const RasterImage& image, const CentroidClassifier& clf, int expected);

/// Fraction of samples whose predicted label matches.
double accuracy(const CentroidClassifier& clf, const std::vector<LabelledImage>& samples);

/// Models whose raster has a positive margin for `expected_label`; the
/// others are reported to `warnings` (when not null) and skipped. Throws
/// DigitError for a missing or malformed file.
std::vector<DigitModel> load_seeds(const std::string& path, const CentroidClassifier& clf,
                                   int expected_label, const RasterOptions& options = {},
                                   std::ostream* warnings = &std::clog);

} // namespace frontier::digit
