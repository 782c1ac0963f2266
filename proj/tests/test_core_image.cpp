#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>

#include <opencv2/imgcodecs.hpp>

#include "geosal/color.hpp"
#include "geosal/image_io.hpp"
#include "support.hpp"

using namespace geosal;
using geosal::testing::TempDir;

TEST_CASE("color_distance examples") {
  CHECK(color_distance({0, 0, 0}, {0, 0, 0}) == 0.0);
  CHECK(color_distance({255, 255, 255}, {0, 0, 0}) == 1.0);
  // 24 raw units along one channel, over the 255*sqrt(3) range.
  const double expected = 24.0 / (255.0 * std::sqrt(3.0));
  CHECK(color_distance({100, 100, 100}, {124, 100, 100}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.05434).epsilon(1e-4));
}

TEST_CASE("color_distance is a bounded metric") {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rgb a = geosal::testing::random_rgb(rng);
    const Rgb b = geosal::testing::random_rgb(rng);
    const Rgb c = geosal::testing::random_rgb(rng);
    const double ab = color_distance(a, b);
    CHECK(ab == color_distance(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK((ab == 0.0) == (a == b));
    CHECK(ab <= color_distance(a, c) + color_distance(c, b) + 1e-12);
  }
}

TEST_CASE("raster construction") {
  CHECK_THROWS_AS(RgbImage(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(GrayMap(2, 2, std::vector<std::uint8_t>(3)), std::invalid_argument);
  GrayMap m(3, 2, std::vector<std::uint8_t>{0, 1, 2, 3, 4, 5});
  CHECK(m.at(2, 1) == 5);
  CHECK(m.index(1, 1) == 4);

  const auto r = rotate90(m);
  CHECK(r.width() == 2);
  CHECK(r.height() == 3);
  CHECK(r.at(1, 0) == 0);
  CHECK(rotate90(rotate90(rotate90(r))) == m);
  CHECK(mirror_x(mirror_x(m)) == m);
}

TEST_CASE("lossless round trip is bit exact") {
  TempDir dir("io");
  RgbImage img(2, 2, std::vector<Rgb>{{1, 2, 3}, {250, 0, 7}, {0, 0, 0}, {255, 255, 255}});
  save_image(img, dir / "img.png");
  CHECK(load_image(dir / "img.png") == img);

  std::mt19937 rng(5);
  const auto big = geosal::testing::random_image(rng, 17, 9);
  save_image(big, dir / "big.bmp");
  CHECK(load_image(dir / "big.bmp") == big);

  GrayMap gray(3, 1, std::vector<std::uint8_t>{0, 128, 255});
  save_gray(gray, dir / "g.png");
  CHECK(load_gray(dir / "g.png") == gray);

  BinaryMask mask(3, 2);
  mask.set(1, 1, true);
  save_mask(mask, dir / "m.png");
  CHECK(load_mask(dir / "m.png") == mask);
  const auto raw = cv::imread((dir / "m.png").string(), cv::IMREAD_UNCHANGED);
  CHECK(raw.channels() == 1);
  CHECK(raw.at<std::uint8_t>(1, 1) == 255);
  CHECK(raw.at<std::uint8_t>(0, 0) == 0);
}

TEST_CASE("save_rgba alpha follows the mask") {
  TempDir dir("rgba");
  std::mt19937 rng(9);
  const auto img = geosal::testing::random_image(rng, 4, 3);

  save_rgba(img, BinaryMask(4, 3, true), dir / "opaque.png");
  const auto opaque = cv::imread((dir / "opaque.png").string(), cv::IMREAD_UNCHANGED);
  REQUIRE(opaque.channels() == 4);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) {
      const auto px = opaque.at<cv::Vec4b>(y, x);
      CHECK(px[3] == 255);
      CHECK(px[2] == img.at(x, y).r);
      CHECK(px[1] == img.at(x, y).g);
      CHECK(px[0] == img.at(x, y).b);
    }
  }
  CHECK(load_image(dir / "opaque.png") == img);

  save_rgba(img, BinaryMask(4, 3, false), dir / "clear.png");
  const auto clear = cv::imread((dir / "clear.png").string(), cv::IMREAD_UNCHANGED);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) CHECK(clear.at<cv::Vec4b>(y, x)[3] == 0);
  }
}

namespace {

ImageIoError::Kind failure_kind(const auto& action) {
  try {
    action();
  } catch (const ImageIoError& e) {
    return e.kind();
  }
  FAIL("expected an ImageIoError");
  return ImageIoError::Kind::WriteFailed;
}

}  // namespace

TEST_CASE("I/O failures are reported distinctly") {
  TempDir dir("ioerr");
  const RgbImage img(2, 2);
  using K = ImageIoError::Kind;

  CHECK(failure_kind([&] { load_image(dir / "missing.png"); }) == K::Unreadable);
  std::ofstream(dir / "notes.xyz") << "hello";
  CHECK(failure_kind([&] { load_image(dir / "notes.xyz"); }) == K::UnsupportedFormat);
  std::ofstream(dir / "broken.png") << "not a png";
  CHECK(failure_kind([&] { load_image(dir / "broken.png"); }) == K::Unreadable);
  CHECK(failure_kind([&] { save_image(img, dir / "out.xyz"); }) == K::UnsupportedFormat);
  CHECK(failure_kind([&] { save_rgba(img, BinaryMask(3, 2), dir / "a.png"); }) == K::DimensionMismatch);
  CHECK(failure_kind([&] { save_rgba(img, BinaryMask(2, 2), dir / "a.jpg"); }) == K::UnsupportedFormat);
  CHECK(failure_kind([&] { save_image(img, dir / "no_such_dir" / "x.png"); }) == K::WriteFailed);
}
