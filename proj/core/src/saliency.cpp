#include "geosal/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geosal {

SaliencyMap::SaliencyMap(Raster<double> values) : values_(std::move(values)) {
  for (double v : values_.pixels()) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("saliency values must lie in [0, 1]");
  }
}

GrayMap SaliencyMap::quantized() const { return quantize(*this); }

std::uint8_t quantize_value(double s) {
  const double scaled = std::floor(std::clamp(s, 0.0, 1.0) * 255.0 + 0.5);
  return static_cast<std::uint8_t>(scaled);
}

GrayMap quantize(const SaliencyMap& map) {
  GrayMap out(map.width(), map.height());
  for (std::size_t i = 0; i < map.size(); ++i) out[i] = quantize_value(map[i]);
  return out;
}

SeedSet border_seeds(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("border seeds need a non-empty grid");
  std::vector<PixelCoord> coords;
  coords.reserve(static_cast<std::size_t>(2 * (width + height)));
  for (int y = 0; y < height; ++y) {
    if (y == 0 || y == height - 1) {
      for (int x = 0; x < width; ++x) coords.push_back({x, y});
    } else {
      coords.push_back({0, y});
      if (width > 1) coords.push_back({width - 1, y});
    }
  }
  return SeedSet(width, height, std::move(coords));
}

SaliencyMap saliency_from_distance(const DistanceField& field) {
  double peak = 0.0;
  for (double g : field.pixels()) {
    if (!std::isfinite(g) || g < 0.0) throw std::invalid_argument("distance field must be finite and non-negative");
    peak = std::max(peak, g);
  }
  Raster<double> values(field.width(), field.height(), 0.0);
  if (peak > 0.0) {
    for (std::size_t i = 0; i < field.size(); ++i) values[i] = field[i] / peak;
  }
  return SaliencyMap(std::move(values));
}

SaliencyMap geodesic_saliency(const RgbImage& image, const TunnelParams& params) {
  const auto seeds = border_seeds(image.width(), image.height());
  return saliency_from_distance(tunneling_geodesic_transform(image, seeds, params));
}

SaliencyMap classic_saliency(const RgbImage& image, Connectivity connectivity) {
  const auto seeds = border_seeds(image.width(), image.height());
  return saliency_from_distance(classic_geodesic_transform(image, seeds, connectivity));
}

}  // namespace geosal
