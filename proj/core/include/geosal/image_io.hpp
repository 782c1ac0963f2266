#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "geosal/raster.hpp"

namespace geosal {

class ImageIoError : public std::runtime_error {
 public:
  enum class Kind { Unreadable, UnsupportedFormat, DimensionMismatch, WriteFailed };

  ImageIoError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// True when the file extension names a raster format we can decode.
bool is_supported_image(const std::filesystem::path& path);

RgbImage load_image(const std::filesystem::path& path);
GrayMap load_gray(const std::filesystem::path& path);
/// Any non-zero-ish value (> 127) counts as foreground.
BinaryMask load_mask(const std::filesystem::path& path);

void save_image(const RgbImage& image, const std::filesystem::path& path);
void save_gray(const GrayMap& map, const std::filesystem::path& path);
/// Single channel, 255 for foreground and 0 elsewhere.
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);
/// Writes the image with alpha 255 inside the mask and 0 outside. Needs a
/// format with an alpha channel (png, tiff, webp).
void save_rgba(const RgbImage& image, const BinaryMask& mask, const std::filesystem::path& path);

}  // namespace geosal
