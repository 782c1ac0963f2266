#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geosal/batch.hpp"
#include "geosal/raster.hpp"

namespace geosal {

/// Backgrounds of the synthetic scenes.
///  - Flat: one color.
///  - Checkerboard: square checks of one color in a lattice of bars of a
///    second color. Same-colored checks never touch, not even at corners, and
///    the lattice period is shorter than the default tunnel reach.
///  - Noise: a base color with independent per-pixel jitter.
enum class Background { Flat, Checkerboard, Noise };

std::string_view to_string(Background background);

struct SynthOptions {
  int width = 160;
  int height = 120;
  /// Forces every scene onto one background; otherwise they cycle.
  std::optional<Background> background;
};

struct SynthScene {
  std::string stem;
  Background background = Background::Flat;
  RgbImage image;
  BinaryMask truth;
};

/// Check size and bar width of the lattice background, both derived from the
/// default tunnel reach for the given image size.
struct LatticeGeometry {
  int check = 1;
  int bar = 1;
  int period() const { return check + bar; }
};

LatticeGeometry lattice_geometry(int width, int height);

/// A centered, gently shaded disk or rounded rectangle covering 15-50% of the
/// image and clear of the frame, over one of the backgrounds. Deterministic in
/// (seed, index).
SynthScene synth_scene(std::uint64_t seed, int index, const SynthOptions& options = {});

std::vector<SynthScene> synth_dataset(std::uint64_t seed, int count, const SynthOptions& options = {});

std::vector<Sample> to_samples(std::vector<SynthScene> scenes);

/// Writes `images/<stem>.png`, `truth/<stem>.png` and `manifest.csv`
/// (stem,background) under `out_dir`.
void synth_generate(std::uint64_t seed, int count, const std::filesystem::path& out_dir,
                    const SynthOptions& options = {});

}  // namespace geosal
