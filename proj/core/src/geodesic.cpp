#include "geosal/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace geosal {

SeedSet::SeedSet(int width, int height, std::vector<PixelCoord> coords)
    : width_(width), height_(height), coords_(std::move(coords)) {
  if (width < 1 || height < 1) throw std::invalid_argument("seed set needs a non-empty grid");
  if (coords_.empty()) throw std::invalid_argument("empty seed set");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  for (const auto& c : coords_) {
    if (c.x < 0 || c.y < 0 || c.x >= width || c.y >= height) {
      throw std::invalid_argument("seed (" + std::to_string(c.x) + ", " + std::to_string(c.y) +
                                  ") lies outside the image");
    }
    auto& flag = seen[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(c.x)];
    if (flag) {
      throw std::invalid_argument("duplicate seed (" + std::to_string(c.x) + ", " +
                                  std::to_string(c.y) + ")");
    }
    flag = 1;
  }
}

void TunnelParams::validate() const {
  if (!(k_t > 0.0) || !std::isfinite(k_t)) throw std::invalid_argument("k_t must be positive");
  if (!(sigma_d_raw > 0.0) || sigma_d_raw * sigma_d_raw > kMaxSquaredRgbDistance) {
    throw std::invalid_argument("sigma_d_raw must lie in (0, 255*sqrt(3)]");
  }
  if (connectivity != Connectivity::Four && connectivity != Connectivity::Eight) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
  if (tunnel_stride && *tunnel_stride < 1) throw std::invalid_argument("tunnel stride must be >= 1");
}

TunnelGeometry resolve_geometry(const TunnelParams& params, int width, int height) {
  params.validate();
  TunnelGeometry g;
  // Tiny images would give sigma_r < 1; clamp so that the reach is merely empty.
  g.sigma_r = std::max(1.0, static_cast<double>(width + height) / params.k_t);
  g.stride = params.tunnel_stride.value_or(std::max(1, static_cast<int>(std::floor(g.sigma_r / 8.0))));
  return g;
}

std::vector<PixelCoord> tunnel_offsets(const TunnelParams& params, const TunnelGeometry& geometry) {
  std::vector<PixelCoord> out;
  if (params.exact_tunnels) {
    // Largest integer Chebyshev radius strictly below sigma_r.
    const int reach = static_cast<int>(std::ceil(geometry.sigma_r)) - 1;
    for (int dy = -reach; dy <= reach; ++dy) {
      for (int dx = -reach; dx <= reach; ++dx) {
        if (dx != 0 || dy != 0) out.push_back({dx, dy});
      }
    }
    return out;
  }
  for (int step = geometry.stride; step < geometry.sigma_r; step += geometry.stride) {
    out.insert(out.end(), {{step, 0}, {-step, 0}, {0, step}, {0, -step},
                           {step, step}, {step, -step}, {-step, step}, {-step, -step}});
  }
  return out;
}

std::vector<PixelCoord> grid_offsets(Connectivity connectivity) {
  if (connectivity == Connectivity::Four) return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
}

namespace detail {

void check_seeds(const RgbImage& image, const SeedSet& seeds) {
  if (seeds.empty()) throw std::invalid_argument("empty seed set");
  if (seeds.width() != image.width() || seeds.height() != image.height()) {
    throw std::invalid_argument("seed set was built for a different image size");
  }
}

std::vector<PixelCoord> extra_tunnel_offsets(const TunnelParams& params, int width, int height) {
  const auto geometry = resolve_geometry(params, width, height);
  auto offsets = tunnel_offsets(params, geometry);
  const auto grid = grid_offsets(params.connectivity);
  std::erase_if(offsets, [&](const PixelCoord& o) {
    return std::find(grid.begin(), grid.end(), o) != grid.end();
  });
  return offsets;
}

}  // namespace detail

DistanceField classic_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                         Connectivity connectivity) {
  return classic_geodesic_transform(image, seeds, connectivity, EuclideanRgbMetric{});
}

DistanceField tunneling_geodesic_transform(const RgbImage& image, const SeedSet& seeds,
                                           const TunnelParams& params) {
  return tunneling_geodesic_transform(image, seeds, params, EuclideanRgbMetric{});
}

namespace {

constexpr std::size_t kOracleMaxPixels = 10'000;

struct Edge {
  std::size_t u;
  std::size_t v;
  double w;
};

// Pairwise edge predicate, written against the edge definition directly rather
// than the offset tables used by the fast transforms.
template <class IsEdge>
DistanceField bellman_ford(const RgbImage& image, const SeedSet& seeds, IsEdge is_edge) {
  detail::check_seeds(image, seeds);
  if (image.size() > kOracleMaxPixels) {
    throw std::invalid_argument("brute-force oracle is limited to 10,000 pixels");
  }
  std::vector<Edge> edges;
  const auto n = image.size();
  const auto w = static_cast<std::size_t>(image.width());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const int dx = static_cast<int>(b % w) - static_cast<int>(a % w);
      const int dy = static_cast<int>(b / w) - static_cast<int>(a / w);
      if (is_edge(dx, dy, image[a], image[b])) edges.push_back({a, b, color_distance(image[a], image[b])});
    }
  }

  DistanceField dist(image.width(), image.height(), std::numeric_limits<double>::infinity());
  for (const auto& s : seeds.coords()) dist.at(s.x, s.y) = 0.0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges) {
      if (dist[e.u] + e.w < dist[e.v]) {
        dist[e.v] = dist[e.u] + e.w;
        changed = true;
      }
      if (dist[e.v] + e.w < dist[e.u]) {
        dist[e.u] = dist[e.v] + e.w;
        changed = true;
      }
    }
  }
  return dist;
}

bool grid_adjacent(int dx, int dy, Connectivity connectivity) {
  const int ax = std::abs(dx);
  const int ay = std::abs(dy);
  if (connectivity == Connectivity::Four) return ax + ay == 1;
  return std::max(ax, ay) == 1;
}

}  // namespace

DistanceField brute_force_geodesic(const RgbImage& image, const SeedSet& seeds,
                                   Connectivity connectivity) {
  return bellman_ford(image, seeds, [&](int dx, int dy, Rgb, Rgb) {
    return grid_adjacent(dx, dy, connectivity);
  });
}

DistanceField brute_force_geodesic(const RgbImage& image, const SeedSet& seeds,
                                   const TunnelParams& params) {
  const auto geometry = resolve_geometry(params, image.width(), image.height());
  const double max_sq = params.sigma_d_raw * params.sigma_d_raw;
  return bellman_ford(image, seeds, [&](int dx, int dy, Rgb a, Rgb b) {
    if (grid_adjacent(dx, dy, params.connectivity)) return true;
    const int ax = std::abs(dx);
    const int ay = std::abs(dy);
    const int cheb = std::max(ax, ay);
    if (cheb == 0 || !(cheb < geometry.sigma_r)) return false;
    if (squared_rgb_distance(a, b) > max_sq) return false;
    if (params.exact_tunnels) return true;
    const bool on_ray = ax == 0 || ay == 0 || ax == ay;
    return on_ray && cheb % geometry.stride == 0;
  });
}

}  // namespace geosal
