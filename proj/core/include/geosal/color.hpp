#pragma once

#include <cmath>

#include "geosal/raster.hpp"

namespace geosal {

/// 3 * 255^2: the largest squared Euclidean distance between two 8-bit RGB triples.
inline constexpr int kMaxSquaredRgbDistance = 3 * 255 * 255;

/// Squared Euclidean distance between two triples in raw 8-bit units.
constexpr int squared_rgb_distance(Rgb a, Rgb b) {
  const int dr = int{a.r} - int{b.r};
  const int dg = int{a.g} - int{b.g};
  const int db = int{a.b} - int{b.b};
  return dr * dr + dg * dg + db * db;
}

/// Euclidean RGB distance divided by 255*sqrt(3), so black-to-white is exactly 1.
inline double color_distance(Rgb a, Rgb b) {
  return std::sqrt(static_cast<double>(squared_rgb_distance(a, b)) / kMaxSquaredRgbDistance);
}

struct EuclideanRgbMetric {
  double operator()(Rgb a, Rgb b) const { return color_distance(a, b); }
};

}  // namespace geosal
