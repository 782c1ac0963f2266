#include "geosal/eval.hpp"

#include <array>
#include <stdexcept>

namespace geosal {

namespace {

PrecisionRecall ratios(std::size_t hits, std::size_t selected, std::size_t relevant) {
  PrecisionRecall pr;
  if (selected == 0) {
    pr.precision = relevant == 0 ? 1.0 : 0.0;
  } else {
    pr.precision = static_cast<double>(hits) / static_cast<double>(selected);
  }
  pr.recall = relevant == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(relevant);
  return pr;
}

}  // namespace

PrecisionRecall precision_recall(const BinaryMask& mask, const BinaryMask& truth) {
  if (!mask.same_shape(truth)) throw std::invalid_argument("mask and ground truth differ in size");
  std::size_t hits = 0;
  std::size_t selected = 0;
  std::size_t relevant = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const bool m = mask[i];
    const bool t = truth[i];
    selected += m;
    relevant += t;
    hits += m && t;
  }
  return ratios(hits, selected, relevant);
}

double f_measure(double precision, double recall, double beta2) {
  const double denom = recall + beta2 * precision;
  if (denom == 0.0) return 0.0;
  return (1.0 + beta2) * precision * recall / denom;
}

EvalMetrics evaluate(const BinaryMask& mask, const BinaryMask& truth, double beta2) {
  const auto pr = precision_recall(mask, truth);
  return {pr.precision, pr.recall, f_measure(pr.precision, pr.recall, beta2), beta2};
}

PrCurve pr_curve(const GrayMap& quantized, const BinaryMask& truth) {
  if (!truth.same_shape(quantized)) throw std::invalid_argument("saliency map and ground truth differ in size");
  // Counts per gray level, split by ground-truth label; thresholding at t
  // selects every level above t.
  std::array<std::size_t, 256> all{};
  std::array<std::size_t, 256> fg{};
  std::size_t relevant = 0;
  for (std::size_t i = 0; i < quantized.size(); ++i) {
    ++all[quantized[i]];
    if (truth[i]) {
      ++fg[quantized[i]];
      ++relevant;
    }
  }
  PrCurve curve;
  curve.points.resize(256);
  std::size_t selected = 0;
  std::size_t hits = 0;
  for (int t = 255; t >= 0; --t) {
    const auto pr = ratios(hits, selected, relevant);
    curve.points[t] = {static_cast<std::uint8_t>(t), pr.precision, pr.recall};
    selected += all[t];
    hits += fg[t];
  }
  return curve;
}

PrCurve pr_curve(const SaliencyMap& map, const BinaryMask& truth) { return pr_curve(quantize(map), truth); }

PrCurve mean_curve(std::span<const PrCurve> curves) {
  PrCurve out;
  out.points.resize(256);
  for (int t = 0; t < 256; ++t) out.points[t].threshold = static_cast<std::uint8_t>(t);
  if (curves.empty()) return out;
  for (const auto& c : curves) {
    if (c.points.size() != 256) throw std::invalid_argument("PR curves must have 256 points");
    for (int t = 0; t < 256; ++t) {
      out.points[t].precision += c.points[t].precision;
      out.points[t].recall += c.points[t].recall;
    }
  }
  const auto n = static_cast<double>(curves.size());
  for (auto& p : out.points) {
    p.precision /= n;
    p.recall /= n;
  }
  return out;
}

double mean_precision(const PrCurve& curve) {
  if (curve.points.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& p : curve.points) sum += p.precision;
  return sum / static_cast<double>(curve.points.size());
}

}  // namespace geosal
