#pragma once

#include <cstdint>

#include "geosal/geodesic.hpp"
#include "geosal/raster.hpp"

namespace geosal {

/// Per-pixel saliency in [0, 1]. The maximum is 1 unless the map is all zero.
class SaliencyMap {
 public:
  SaliencyMap() = default;
  /// Throws std::invalid_argument if any value falls outside [0, 1].
  explicit SaliencyMap(Raster<double> values);

  int width() const { return values_.width(); }
  int height() const { return values_.height(); }
  std::size_t size() const { return values_.size(); }
  double at(int x, int y) const { return values_.at(x, y); }
  double operator[](std::size_t i) const { return values_[i]; }
  const Raster<double>& values() const { return values_; }

  /// 8-bit view, round(s * 255) with halves rounded up.
  GrayMap quantized() const;

 private:
  Raster<double> values_;
};

std::uint8_t quantize_value(double s);
GrayMap quantize(const SaliencyMap& map);

/// Every pixel on the outer frame of a width x height grid.
SeedSet border_seeds(int width, int height);

/// Divides by the maximum; an all-zero field maps to an all-zero saliency map.
SaliencyMap saliency_from_distance(const DistanceField& field);

/// Tunneled geodesic distance to the image frame, max-normalized.
SaliencyMap geodesic_saliency(const RgbImage& image, const TunnelParams& params = {});

/// Same as geodesic_saliency but without tunnels.
SaliencyMap classic_saliency(const RgbImage& image, Connectivity connectivity = Connectivity::Eight);

}  // namespace geosal
