#pragma once

// Fixtures and random generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "geosal/geodesic.hpp"
#include "geosal/raster.hpp"

namespace geosal::testing {

inline Rgb random_rgb(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 255);
  return {static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng))};
}

inline RgbImage random_image(std::mt19937& rng, int w, int h) {
  RgbImage img(w, h);
  for (auto& p : img.pixels()) p = random_rgb(rng);
  return img;
}

/// Pixels drawn from a few base colors plus small jitter, so that many pixel
/// pairs fall inside the default tunnel color budget.
inline RgbImage palette_image(std::mt19937& rng, int w, int h, int colors = 3, int jitter = 8) {
  std::vector<Rgb> base;
  for (int i = 0; i < colors; ++i) base.push_back(random_rgb(rng));
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::uniform_int_distribution<int> j(-jitter, jitter);
  auto clamp8 = [](int v) { return static_cast<std::uint8_t>(v < 0 ? 0 : v > 255 ? 255 : v); };
  RgbImage img(w, h);
  for (auto& p : img.pixels()) {
    const Rgb b = base[pick(rng)];
    p = {clamp8(b.r + j(rng)), clamp8(b.g + j(rng)), clamp8(b.b + j(rng))};
  }
  return img;
}

inline SeedSet random_seeds(std::mt19937& rng, int w, int h, int max_count = 3) {
  std::uniform_int_distribution<int> n(1, max_count);
  std::uniform_int_distribution<int> dx(0, w - 1);
  std::uniform_int_distribution<int> dy(0, h - 1);
  std::vector<PixelCoord> coords;
  const int target = std::min(n(rng), w * h);
  while (static_cast<int>(coords.size()) < target) {
    const PixelCoord c{dx(rng), dy(rng)};
    if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
  }
  return SeedSet(w, h, std::move(coords));
}

/// Flat background with a centered disk of another color.
inline RgbImage disk_image(int size, Rgb background, Rgb disk, double radius_fraction = 0.3) {
  RgbImage img(size, size, background);
  const double c = size / 2.0;
  const double r = radius_fraction * size;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x + 0.5 - c;
      const double dy = y + 0.5 - c;
      if (dx * dx + dy * dy <= r * r) img.at(x, y) = disk;
    }
  }
  return img;
}

inline BinaryMask disk_mask(int size, double radius_fraction = 0.3) {
  BinaryMask m(size, size);
  const double c = size / 2.0;
  const double r = radius_fraction * size;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x + 0.5 - c;
      const double dy = y + 0.5 - c;
      m.set(x, y, dx * dx + dy * dy <= r * r);
    }
  }
  return m;
}

/// Nested squares: background, an outer square and an inner square, giving a
/// saliency map with three plateaus.
inline RgbImage nested_squares(int size, Rgb background, Rgb outer, Rgb inner) {
  RgbImage img(size, size, background);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const int d = std::min({x, y, size - 1 - x, size - 1 - y});
      if (d >= size / 3) {
        img.at(x, y) = inner;
      } else if (d >= size / 6) {
        img.at(x, y) = outer;
      }
    }
  }
  return img;
}

inline SeedSet transform_seeds(const SeedSet& s, bool rotate, int w, int h) {
  std::vector<PixelCoord> out;
  for (const auto& c : s.coords()) out.push_back(rotate ? rotate90(c, h) : mirror_x(c, w));
  return rotate ? SeedSet(h, w, std::move(out)) : SeedSet(w, h, std::move(out));
}

double mean_over(const auto& values, const BinaryMask& mask, bool inside) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == inside) {
      sum += values[i];
      ++n;
    }
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

inline std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("geosal_" + tag + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace geosal::testing
