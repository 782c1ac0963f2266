#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geosal/color.hpp"
#include "geosal/raster.hpp"

namespace geosal {

enum class Connectivity { Four = 4, Eight = 8 };

/// Zero-distance source pixels ("ground") of a distance transform.
/// Always non-empty, in bounds and duplicate free once constructed.
class SeedSet {
 public:
  SeedSet() = default;
  SeedSet(int width, int height, std::vector<PixelCoord> coords);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const PixelCoord> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<PixelCoord> coords_;
};

struct TunnelParams {
  /// sigma_r = (width + height) / k_t.
  double k_t = 30.0;
  /// Raw 8-bit Euclidean RGB budget for a tunnel's endpoints.
  double sigma_d_raw = 24.0;
  Connectivity connectivity = Connectivity::Eight;
  /// Step between sampled tunnel endpoints; derived from sigma_r when unset.
  std::optional<int> tunnel_stride;
  /// Enumerate every endpoint in the Chebyshev disc instead of sampling rays.
  bool exact_tunnels = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Per-image tunnel reach, resolved from TunnelParams and the image size.
struct TunnelGeometry {
  double sigma_r = 1.0;
  int stride = 1;
};

TunnelGeometry resolve_geometry(const TunnelParams& params, int width, int height);

/// Endpoint offsets a pixel may tunnel to: rays along the axes and diagonals
/// at multiples of the stride, or the whole disc in exact mode. Both sets are
/// closed under 90-degree rotation and mirroring.
std::vector<PixelCoord> tunnel_offsets(const TunnelParams& params, const TunnelGeometry& geometry);

std::vector<PixelCoord> grid_offsets(Connectivity connectivity);

using DistanceField = Raster<double>;

template <class M>
concept ColorMetric = std::regular_invocable<const M&, Rgb, Rgb> &&
    std::convertible_to<std::invoke_result_t<const M&, Rgb, Rgb>, double>;

namespace detail {

void check_seeds(const RgbImage& image, const SeedSet& seeds);

/// Label-setting shortest paths over the grid graph, optionally augmented
/// with tunnel edges whose endpoints lie within `max_tunnel_sq` (squared raw
/// RGB distance) of each other.
template <ColorMetric Metric>
DistanceField shortest_paths(const RgbImage& image, const SeedSet& seeds,
                             std::span<const PixelCoord> neighbours,
                             std::span<const PixelCoord> tunnels, double max_tunnel_sq,
                             const Metric& metric) {
  check_seeds(image, seeds);
  const int w = image.width();
  const int h = image.height();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  DistanceField dist(w, h, kInf);
  std::vector<std::uint8_t> settled(image.size(), 0);

  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (const auto& s : seeds.coords()) {
    const auto i = image.index(s.x, s.y);
    dist[i] = 0.0;
    heap.emplace(0.0, static_cast<std::uint32_t>(i));
  }

  auto relax = [&](std::size_t v, double candidate) {
    if (candidate < dist[v]) {
      dist[v] = candidate;
      heap.emplace(candidate, static_cast<std::uint32_t>(v));
    }
  };

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;

    const int ux = static_cast<int>(u % static_cast<std::uint32_t>(w));
    const int uy = static_cast<int>(u / static_cast<std::uint32_t>(w));
    const Rgb cu = image[u];

    for (const auto& off : neighbours) {
      const int vx = ux + off.x;
      const int vy = uy + off.y;
      if (!image.contains(vx, vy)) continue;
      const auto v = image.index(vx, vy);
      if (settled[v]) continue;
      relax(v, d + metric(cu, image[v]));
    }
    for (const auto& off : tunnels) {
      const int vx = ux + off.x;
      const int vy = uy + off.y;
      if (!image.contains(vx, vy)) continue;
      const auto v = image.index(vx, vy);
      if (settled[v]) continue;
      const Rgb cv = image[v];
      if (squared_rgb_distance(cu, cv) > max_tunnel_sq) continue;
      relax(v, d + metric(cu, cv));
    }
  }
  return dist;
}

/// Tunnel offsets that are not already plain grid neighbours.
std::vector<PixelCoord> extra_tunnel_offsets(const TunnelParams& params, int width, int height);

}  // namespace detail

/// Minimum over grid paths of the summed color distance between consecutive
/// pixels. Diagonal steps are not length-weighted.
template <ColorMetric Metric>
DistanceField classic_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                         Connectivity connectivity, const Metric& metric) {
  const auto neighbours = grid_offsets(connectivity);
  return detail::shortest_paths(image, seeds, neighbours, {}, 0.0, metric);
}

DistanceField classic_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                         Connectivity connectivity = Connectivity::Eight);

/// Shortest paths over the grid plus tunnel edges. A tunnel joins two pixels
/// closer than sigma_r (Chebyshev) whose raw RGB distance is at most
/// sigma_d_raw; it costs the color distance of its endpoints. Sampled mode
/// only adds a subset of the exact-mode tunnels, so its distances are never
/// below the exact ones.
template <ColorMetric Metric>
DistanceField tunneling_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                           const TunnelParams& params, const Metric& metric) {
  params.validate();
  const auto neighbours = grid_offsets(params.connectivity);
  const auto tunnels = detail::extra_tunnel_offsets(params, image.width(), image.height());
  return detail::shortest_paths(image, seeds, neighbours, tunnels,
                                params.sigma_d_raw * params.sigma_d_raw, metric);
}

DistanceField tunneling_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                           const TunnelParams& params = {});

/// Bellman-Ford reference over an explicitly enumerated edge list. Only for
/// small images (at most 10,000 pixels); throws std::invalid_argument above that.
DistanceField brute_force_geodesic(const RgbImage& image, const SeedSet& seeds,
                                   Connectivity connectivity);
DistanceField brute_force_geodesic(const RgbImage& image, const SeedSet& seeds,
                                   const TunnelParams& params);

}  // namespace geosal
