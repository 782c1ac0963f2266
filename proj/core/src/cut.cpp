#include "geosal/cut.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace geosal {

std::uint64_t Histogram256::total() const {
  std::uint64_t n = 0;
  for (auto b : bins) n += b;
  return n;
}

Histogram256 histogram(const GrayMap& map) {
  Histogram256 h;
  for (auto v : map.pixels()) ++h.bins[v];
  return h;
}

SmoothedHistogram smooth_histogram(const Histogram256& h, int window) {
  if (window < 1 || window % 2 == 0) {
    throw std::invalid_argument("smoothing window must be a positive odd number");
  }
  const int radius = window / 2;
  SmoothedHistogram out;
  for (int i = 0; i < 256; ++i) {
    if (h.bins[i] == 0) continue;
    const int lo = std::max(0, i - radius);
    const int hi = std::min(255, i + radius);
    const double share = static_cast<double>(h.bins[i]) / static_cast<double>(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) out.bins[j] += share;
  }
  return out;
}

SmoothedHistogram to_smoothed(const Histogram256& h) { return smooth_histogram(h, 1); }

std::vector<std::uint8_t> find_cut_thresholds(const SmoothedHistogram& h) {
  std::vector<std::uint8_t> out;
  const auto& b = h.bins;
  int start = 0;
  while (start < 256) {
    int end = start;
    while (end + 1 < 256 && b[end + 1] == b[start]) ++end;
    // Runs touching bin 0 or 255 have only one flank and never qualify.
    if (start > 0 && end < 255 && b[start - 1] > b[start] && b[end + 1] > b[start]) {
      out.push_back(static_cast<std::uint8_t>((start + end) / 2));
    }
    start = end + 1;
  }
  return out;
}

std::uint8_t adaptive_threshold(const GrayMap& quantized) {
  double sum = 0.0;
  for (auto v : quantized.pixels()) sum += v;
  const double twice_mean = 2.0 * sum / static_cast<double>(quantized.size());
  return static_cast<std::uint8_t>(std::floor(std::min(twice_mean, 255.0) + 0.5));
}

std::uint8_t adaptive_threshold(const SaliencyMap& map) { return adaptive_threshold(quantize(map)); }

std::uint8_t select_threshold(std::span<const std::uint8_t> candidates, std::uint8_t target) {
  if (candidates.empty()) return target;
  std::uint8_t best = candidates.front();
  int best_gap = 256;
  for (auto c : candidates) {
    const int gap = std::abs(int{c} - int{target});
    if (gap < best_gap || (gap == best_gap && c < best)) {
      best = c;
      best_gap = gap;
    }
  }
  return best;
}

std::uint8_t select_threshold(std::span<const std::uint8_t> candidates, const SaliencyMap& map) {
  return select_threshold(candidates, adaptive_threshold(map));
}

BinaryMask apply_threshold(const GrayMap& map, std::uint8_t t) {
  BinaryMask mask(map.width(), map.height());
  for (std::size_t i = 0; i < map.size(); ++i) mask.set(i, map[i] > t);
  return mask;
}

CutHierarchy hierarchical_cut(const SaliencyMap& map, int smoothing_window) {
  const GrayMap quantized = quantize(map);
  CutHierarchy cut;
  cut.thresholds = find_cut_thresholds(smooth_histogram(histogram(quantized), smoothing_window));
  cut.masks.reserve(cut.thresholds.size());
  for (auto t : cut.thresholds) cut.masks.push_back(apply_threshold(quantized, t));

  const auto target = adaptive_threshold(quantized);
  cut.fallback = cut.thresholds.empty();
  cut.selected = select_threshold(cut.thresholds, target);
  cut.selected_mask = apply_threshold(quantized, cut.selected);
  return cut;
}

}  // namespace geosal
