#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geosal/raster.hpp"
#include "geosal/saliency.hpp"

namespace geosal {

inline constexpr double kDefaultBeta2 = 0.3;

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

struct EvalMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double beta2 = kDefaultBeta2;
};

/// Empty mask: precision is 1 when the truth is empty too, else 0.
/// Empty truth: recall is 1. Throws std::invalid_argument on a size mismatch.
PrecisionRecall precision_recall(const BinaryMask& mask, const BinaryMask& truth);

/// Weighted harmonic mean (1 + b2) P R / (R + b2 P); 0 when the denominator is 0.
double f_measure(double precision, double recall, double beta2 = kDefaultBeta2);

EvalMetrics evaluate(const BinaryMask& mask, const BinaryMask& truth, double beta2 = kDefaultBeta2);

struct PrPoint {
  std::uint8_t threshold = 0;
  double precision = 0.0;
  double recall = 0.0;
};

/// 256 points, one per threshold 0..255, ascending.
struct PrCurve {
  std::vector<PrPoint> points;
};

/// Metrics of apply_threshold(map, t) against the truth for every t.
PrCurve pr_curve(const GrayMap& quantized, const BinaryMask& truth);
PrCurve pr_curve(const SaliencyMap& map, const BinaryMask& truth);

/// Pointwise mean of curves that share the same thresholds.
PrCurve mean_curve(std::span<const PrCurve> curves);

/// Mean precision over all thresholds of a curve.
double mean_precision(const PrCurve& curve);

}  // namespace geosal
