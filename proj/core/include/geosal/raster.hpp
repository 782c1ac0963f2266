#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geosal {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct PixelCoord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

/// Row-major 2D grid of values. A default-constructed raster is empty (0x0);
/// any raster built with explicit dimensions is at least 1x1.
template <class T>
class Raster {
 public:
  using value_type = T;

  Raster() = default;

  Raster(int width, int height, T fill = T{}) : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  Raster(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument("raster data length does not match width*height");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  T& at(int x, int y) { return data_[index(x, y)]; }
  const T& at(int x, int y) const { return data_[index(x, y)]; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::span<T> pixels() { return data_; }
  std::span<const T> pixels() const { return data_; }

  template <class U>
  bool same_shape(const Raster<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  static void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("raster dimensions must be at least 1x1, got " +
                                  std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using RgbImage = Raster<Rgb>;
using GrayMap = Raster<std::uint8_t>;

/// Foreground/background labelling, one flag per pixel (true = foreground).
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool fill = false)
      : bits_(width, height, static_cast<std::uint8_t>(fill ? 1 : 0)) {}

  int width() const { return bits_.width(); }
  int height() const { return bits_.height(); }
  std::size_t size() const { return bits_.size(); }

  bool at(int x, int y) const { return bits_.at(x, y) != 0; }
  void set(int x, int y, bool on) { bits_.at(x, y) = on ? 1 : 0; }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool on) { bits_[i] = on ? 1 : 0; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto v : bits_.pixels()) n += v;
    return n;
  }

  /// True when every foreground pixel of this mask is also foreground in `other`.
  bool subset_of(const BinaryMask& other) const {
    if (width() != other.width() || height() != other.height()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if ((*this)[i] && !other[i]) return false;
    }
    return true;
  }

  template <class U>
  bool same_shape(const Raster<U>& r) const {
    return width() == r.width() && height() == r.height();
  }
  bool same_shape(const BinaryMask& m) const {
    return width() == m.width() && height() == m.height();
  }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  Raster<std::uint8_t> bits_;
};

// Dihedral transforms. rotate90 turns the grid clockwise: (x, y) -> (H-1-y, x).

template <class T>
Raster<T> rotate90(const Raster<T>& in) {
  Raster<T> out(in.height(), in.width());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) out.at(in.height() - 1 - y, x) = in.at(x, y);
  }
  return out;
}

template <class T>
Raster<T> mirror_x(const Raster<T>& in) {
  Raster<T> out(in.width(), in.height());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) out.at(in.width() - 1 - x, y) = in.at(x, y);
  }
  return out;
}

inline PixelCoord rotate90(PixelCoord p, int height) { return {height - 1 - p.y, p.x}; }
inline PixelCoord mirror_x(PixelCoord p, int width) { return {width - 1 - p.x, p.y}; }

}  // namespace geosal
