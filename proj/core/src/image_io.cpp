#include "geosal/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace fs = std::filesystem;

namespace geosal {

namespace {

using Kind = ImageIoError::Kind;

std::string lower_extension(const fs::path& path) {
  auto ext = path.extension().string();
  std::ranges::transform(ext, ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

bool alpha_capable(const fs::path& path) {
  const auto ext = lower_extension(path);
  return ext == ".png" || ext == ".tif" || ext == ".tiff" || ext == ".webp";
}

cv::Mat read(const fs::path& path, int flags) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw ImageIoError(Kind::Unreadable, "cannot open " + path.string());
  if (!is_supported_image(path)) {
    throw ImageIoError(Kind::UnsupportedFormat, "unsupported image format: " + path.string());
  }
  cv::Mat m;
  try {
    m = cv::imread(path.string(), flags);
  } catch (const cv::Exception&) {
    m.release();
  }
  if (m.empty()) throw ImageIoError(Kind::Unreadable, "failed to decode " + path.string());
  if (m.depth() != CV_8U) {
    // 16-bit PNG/TIFF inputs: scale down to 8 bits.
    cv::Mat eight;
    m.convertTo(eight, CV_8U, m.depth() == CV_16U ? 1.0 / 257.0 : 1.0);
    m = eight;
  }
  return m;
}

void write(const cv::Mat& m, const fs::path& path) {
  bool supported = false;
  try {
    supported = !lower_extension(path).empty() && cv::haveImageWriter(path.string());
  } catch (const cv::Exception&) {
    supported = false;
  }
  if (!supported) throw ImageIoError(Kind::UnsupportedFormat, "unsupported output format: " + path.string());
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), m);
  } catch (const cv::Exception&) {
    ok = false;
  }
  if (!ok) throw ImageIoError(Kind::WriteFailed, "failed to write " + path.string());
}

GrayMap to_gray(const cv::Mat& m) {
  GrayMap out(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y) {
    const auto* row = m.ptr<std::uint8_t>(y);
    std::copy(row, row + m.cols, &out.at(0, y));
  }
  return out;
}

}  // namespace

bool is_supported_image(const fs::path& path) {
  const auto ext = lower_extension(path);
  static const std::vector<std::string> known = {".png", ".bmp", ".jpg", ".jpeg", ".tif", ".tiff",
                                                 ".pgm", ".ppm", ".pnm", ".webp"};
  return std::ranges::find(known, ext) != known.end();
}

RgbImage load_image(const fs::path& path) {
  const cv::Mat m = read(path, cv::IMREAD_COLOR);
  RgbImage out(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y) {
    const auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < m.cols; ++x) out.at(x, y) = {row[x][2], row[x][1], row[x][0]};
  }
  return out;
}

GrayMap load_gray(const fs::path& path) { return to_gray(read(path, cv::IMREAD_GRAYSCALE)); }

BinaryMask load_mask(const fs::path& path) {
  const GrayMap gray = load_gray(path);
  BinaryMask mask(gray.width(), gray.height());
  for (std::size_t i = 0; i < gray.size(); ++i) mask.set(i, gray[i] > 127);
  return mask;
}

void save_image(const RgbImage& image, const fs::path& path) {
  cv::Mat m(image.height(), image.width(), CV_8UC3);
  for (int y = 0; y < image.height(); ++y) {
    auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width(); ++x) {
      const Rgb p = image.at(x, y);
      row[x] = {p.b, p.g, p.r};
    }
  }
  write(m, path);
}

void save_gray(const GrayMap& map, const fs::path& path) {
  cv::Mat m(map.height(), map.width(), CV_8UC1);
  for (int y = 0; y < map.height(); ++y) {
    std::copy_n(&map.at(0, y), map.width(), m.ptr<std::uint8_t>(y));
  }
  write(m, path);
}

void save_mask(const BinaryMask& mask, const fs::path& path) {
  cv::Mat m(mask.height(), mask.width(), CV_8UC1);
  for (int y = 0; y < mask.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < mask.width(); ++x) row[x] = mask.at(x, y) ? 255 : 0;
  }
  write(m, path);
}

void save_rgba(const RgbImage& image, const BinaryMask& mask, const fs::path& path) {
  if (!mask.same_shape(image)) {
    throw ImageIoError(Kind::DimensionMismatch, "mask size does not match the image");
  }
  if (!alpha_capable(path)) {
    throw ImageIoError(Kind::UnsupportedFormat, "format has no alpha channel: " + path.string());
  }
  cv::Mat m(image.height(), image.width(), CV_8UC4);
  for (int y = 0; y < image.height(); ++y) {
    auto* row = m.ptr<cv::Vec4b>(y);
    for (int x = 0; x < image.width(); ++x) {
      const Rgb p = image.at(x, y);
      row[x] = {p.b, p.g, p.r, static_cast<std::uint8_t>(mask.at(x, y) ? 255 : 0)};
    }
  }
  write(m, path);
}

}  // namespace geosal
