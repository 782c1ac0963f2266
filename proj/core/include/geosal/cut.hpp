#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "geosal/raster.hpp"
#include "geosal/saliency.hpp"

namespace geosal {

struct Histogram256 {
  std::array<std::uint64_t, 256> bins{};

  std::uint64_t total() const;
};

struct SmoothedHistogram {
  std::array<double, 256> bins{};
};

inline constexpr int kDefaultSmoothingWindow = 5;

Histogram256 histogram(const GrayMap& map);

/// Centered box filter of odd width. Each bin spreads its count evenly over
/// the in-range bins of its window, so the total mass is preserved at the
/// edges. Throws std::invalid_argument for an even or non-positive window.
SmoothedHistogram smooth_histogram(const Histogram256& h, int window);
SmoothedHistogram to_smoothed(const Histogram256& h);

/// Valley bins of the histogram. A maximal run of equal values is one
/// candidate, located at its (lower) midpoint, and counts only if the bins
/// on both sides of the run are strictly larger. Result is ascending.
std::vector<std::uint8_t> find_cut_thresholds(const SmoothedHistogram& h);

/// Twice the mean quantized saliency, clamped to 255.
std::uint8_t adaptive_threshold(const GrayMap& quantized);
std::uint8_t adaptive_threshold(const SaliencyMap& map);

/// Candidate nearest to `target`, lower one on ties; `target` itself when
/// there are no candidates.
std::uint8_t select_threshold(std::span<const std::uint8_t> candidates, std::uint8_t target);
std::uint8_t select_threshold(std::span<const std::uint8_t> candidates, const SaliencyMap& map);

/// Foreground iff value > t, so t = 255 always gives an empty mask.
BinaryMask apply_threshold(const GrayMap& map, std::uint8_t t);

struct CutHierarchy {
  std::vector<std::uint8_t> thresholds;
  /// One mask per threshold, same order; each is a subset of the previous.
  std::vector<BinaryMask> masks;
  std::uint8_t selected = 0;
  BinaryMask selected_mask;
  /// True when no valley was found and the twice-mean threshold was used.
  bool fallback = false;
};

CutHierarchy hierarchical_cut(const SaliencyMap& map, int smoothing_window = kDefaultSmoothingWindow);

}  // namespace geosal
