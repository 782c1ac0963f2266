#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geosal/cut.hpp"
#include "geosal/eval.hpp"
#include "geosal/geodesic.hpp"

namespace geosal {

/// How a saliency map is binarized before scoring: twice-mean threshold, or
/// the threshold picked by the hierarchical cut.
enum class CutMode { Adaptive, Hierarchical };

std::string_view to_string(CutMode mode);
std::optional<CutMode> parse_cut_mode(std::string_view text);

struct Sample {
  std::string stem;
  RgbImage image;
  BinaryMask truth;
};

struct BatchOptions {
  TunnelParams params;
  CutMode mode = CutMode::Hierarchical;
  int smoothing_window = kDefaultSmoothingWindow;
  double beta2 = kDefaultBeta2;
  /// Worker threads; results do not depend on this.
  int jobs = 1;
};

struct ImageResult {
  std::string stem;
  EvalMetrics metrics;
  std::uint8_t threshold = 0;
  PrCurve curve;
};

struct BatchIssue {
  std::string stem;
  std::string message;
};

struct BatchReport {
  CutMode mode = CutMode::Hierarchical;
  double k_t = 30.0;
  /// Sorted by stem.
  std::vector<ImageResult> images;
  std::vector<BatchIssue> issues;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double mean_f = 0.0;
  PrCurve mean_curve;
};

/// Thresholds the map according to options.mode and scores it.
ImageResult score_saliency(std::string stem, const SaliencyMap& map, const BinaryMask& truth,
                           const BatchOptions& options);

BatchReport evaluate_samples(std::span<const Sample> samples, const BatchOptions& options);

/// Pairs `<image_dir>/<stem>.<ext>` with `<truth_dir>/<stem>.<ext>`, computes
/// saliency for each image and scores it. Unpaired, unreadable or mismatched
/// files are recorded in `issues` and skipped.
BatchReport batch_evaluate(const std::filesystem::path& image_dir,
                           const std::filesystem::path& truth_dir, const BatchOptions& options);

/// Like batch_evaluate, but scores precomputed grayscale saliency maps.
BatchReport evaluate_saliency_maps(const std::filesystem::path& map_dir,
                                   const std::filesystem::path& truth_dir,
                                   const BatchOptions& options);

/// Writes per_image.csv, pr_curve.csv and summary.csv into `out_dir`.
void write_reports(const BatchReport& report, const std::filesystem::path& out_dir);

/// summary.csv rows for several reports (e.g. a k_t sweep).
void write_summary(std::span<const BatchReport> reports, const std::filesystem::path& file);

}  // namespace geosal
