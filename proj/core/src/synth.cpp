#include "geosal/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "geosal/color.hpp"
#include "geosal/image_io.hpp"

namespace fs = std::filesystem;

namespace geosal {

std::string_view to_string(Background background) {
  switch (background) {
    case Background::Flat: return "flat";
    case Background::Checkerboard: return "checkerboard";
    case Background::Noise: return "noise";
  }
  return "unknown";
}

LatticeGeometry lattice_geometry(int width, int height) {
  const double reach = std::max(1.0, (width + height) / TunnelParams{}.k_t);
  LatticeGeometry g;
  // Bars are too wide for half the default reach but narrow enough for the full one.
  g.bar = std::max(1, static_cast<int>(std::ceil(reach / 2.0)) - 1);
  g.check = std::max(1, static_cast<int>(std::ceil(reach)) - 1 - g.bar);
  return g;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Distribution helpers written against the raw engine output so scenes are
// identical across standard library implementations.
class SceneRng {
 public:
  explicit SceneRng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  Rgb color(int lo, int hi) {
    return {static_cast<std::uint8_t>(uniform_int(lo, hi)), static_cast<std::uint8_t>(uniform_int(lo, hi)),
            static_cast<std::uint8_t>(uniform_int(lo, hi))};
  }

 private:
  std::mt19937_64 engine_;
};

double rgb_l2(Rgb a, Rgb b) { return std::sqrt(static_cast<double>(squared_rgb_distance(a, b))); }

std::uint8_t clamp8(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

constexpr double kMinObjectContrast = 150.0;
constexpr int kShade = 8;
constexpr int kNoiseAmplitude = 10;
constexpr int kFrameClearance = 3;

Rgb distinct_color(SceneRng& rng, std::initializer_list<Rgb> avoid) {
  for (;;) {
    const Rgb c = rng.color(30, 225);
    if (std::ranges::all_of(avoid, [&](Rgb a) { return rgb_l2(a, c) >= kMinObjectContrast; })) return c;
  }
}

BinaryMask object_mask(SceneRng& rng, int w, int h) {
  const double cx = w / 2.0 + rng.uniform(-w / 20.0, w / 20.0);
  const double cy = h / 2.0 + rng.uniform(-h / 20.0, h / 20.0);
  const double fraction = rng.uniform(0.18, 0.35);
  const double area = fraction * w * h;
  const double room_x = std::min(cx, w - cx) - kFrameClearance;
  const double room_y = std::min(cy, h - cy) - kFrameClearance;

  BinaryMask mask(w, h);
  if (rng.uniform_int(0, 1) == 0) {
    const double r = std::min({std::sqrt(area / std::numbers::pi), room_x, room_y});
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double dx = x + 0.5 - cx;
        const double dy = y + 0.5 - cy;
        mask.set(x, y, dx * dx + dy * dy <= r * r);
      }
    }
    return mask;
  }
  const double aspect = rng.uniform(0.8, 1.25);
  // Rounding removes (4 - pi) rc^2 with rc = quarter of the short side; grow to compensate.
  const double rounding_loss = 1.0 - (4.0 - std::numbers::pi) / 16.0;
  double hw = std::sqrt(area * aspect / rounding_loss) / 2.0;
  double hh = area / rounding_loss / (4.0 * hw);
  hw = std::min(hw, room_x);
  hh = std::min(hh, room_y);
  const double rc = 0.5 * std::min(hw, hh);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double dx = std::abs(x + 0.5 - cx);
      const double dy = std::abs(y + 0.5 - cy);
      bool inside = dx <= hw && dy <= hh;
      const double qx = dx - (hw - rc);
      const double qy = dy - (hh - rc);
      if (inside && qx > 0 && qy > 0) inside = qx * qx + qy * qy <= rc * rc;
      mask.set(x, y, inside);
    }
  }
  return mask;
}

}  // namespace

SynthScene synth_scene(std::uint64_t seed, int index, const SynthOptions& options) {
  const int w = options.width;
  const int h = options.height;
  SceneRng rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));

  SynthScene scene;
  char stem[32];
  std::snprintf(stem, sizeof stem, "scene_%03d", index);
  scene.stem = stem;
  scene.background = options.background.value_or(static_cast<Background>(index % 3));
  scene.image = RgbImage(w, h);

  Rgb object;
  switch (scene.background) {
    case Background::Flat: {
      const Rgb bg = rng.color(30, 225);
      object = distinct_color(rng, {bg});
      for (auto& p : scene.image.pixels()) p = bg;
      break;
    }
    case Background::Checkerboard: {
      const Rgb bar = rng.color(30, 225);
      Rgb check;
      do {
        check = rng.color(30, 225);
      } while (rgb_l2(bar, check) < 90.0 || rgb_l2(bar, check) > 170.0);
      object = distinct_color(rng, {bar, check});
      const auto lattice = lattice_geometry(w, h);
      // Phase keeps checks on column 0 and row 0, so some checks touch the frame.
      const int px = rng.uniform_int(0, lattice.check - 1);
      const int py = rng.uniform_int(0, lattice.check - 1);
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          const bool in_check = (x + px) % lattice.period() < lattice.check &&
                                (y + py) % lattice.period() < lattice.check;
          scene.image.at(x, y) = in_check ? check : bar;
        }
      }
      break;
    }
    case Background::Noise: {
      const Rgb base = rng.color(30, 225);
      object = distinct_color(rng, {base});
      for (auto& p : scene.image.pixels()) {
        p = {clamp8(base.r + rng.uniform_int(-kNoiseAmplitude, kNoiseAmplitude)),
             clamp8(base.g + rng.uniform_int(-kNoiseAmplitude, kNoiseAmplitude)),
             clamp8(base.b + rng.uniform_int(-kNoiseAmplitude, kNoiseAmplitude))};
      }
      break;
    }
  }

  scene.truth = object_mask(rng, w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!scene.truth.at(x, y)) continue;
      const int sx = static_cast<int>(std::lround(kShade * (2.0 * x / (w - 1) - 1.0)));
      const int sy = static_cast<int>(std::lround(kShade * (2.0 * y / (h - 1) - 1.0)));
      scene.image.at(x, y) = {clamp8(object.r + sx), clamp8(object.g + sy), clamp8(object.b - sx)};
    }
  }
  return scene;
}

std::vector<SynthScene> synth_dataset(std::uint64_t seed, int count, const SynthOptions& options) {
  std::vector<SynthScene> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(synth_scene(seed, i, options));
  return out;
}

std::vector<Sample> to_samples(std::vector<SynthScene> scenes) {
  std::vector<Sample> out;
  out.reserve(scenes.size());
  for (auto& s : scenes) out.push_back({std::move(s.stem), std::move(s.image), std::move(s.truth)});
  return out;
}

void synth_generate(std::uint64_t seed, int count, const fs::path& out_dir, const SynthOptions& options) {
  std::error_code ec;
  fs::create_directories(out_dir / "images", ec);
  fs::create_directories(out_dir / "truth", ec);
  if (ec) throw ImageIoError(ImageIoError::Kind::WriteFailed, "cannot create " + out_dir.string() + ": " + ec.message());

  std::ofstream manifest(out_dir / "manifest.csv");
  if (!manifest) throw ImageIoError(ImageIoError::Kind::WriteFailed, "cannot write manifest in " + out_dir.string());
  manifest << "stem,background\n";
  for (int i = 0; i < count; ++i) {
    const auto scene = synth_scene(seed, i, options);
    save_image(scene.image, out_dir / "images" / (scene.stem + ".png"));
    save_mask(scene.truth, out_dir / "truth" / (scene.stem + ".png"));
    manifest << scene.stem << ',' << to_string(scene.background) << '\n';
  }
}

}  // namespace geosal
