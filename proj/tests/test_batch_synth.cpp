#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <sstream>

#include "geosal/batch.hpp"
#include "geosal/image_io.hpp"
#include "geosal/saliency.hpp"
#include "geosal/synth.hpp"
#include "support.hpp"

using namespace geosal;
namespace fs = std::filesystem;
using geosal::testing::TempDir;

namespace {

bool touches_frame(const BinaryMask& m) {
  for (int x = 0; x < m.width(); ++x) {
    if (m.at(x, 0) || m.at(x, m.height() - 1)) return true;
  }
  for (int y = 0; y < m.height(); ++y) {
    if (m.at(0, y) || m.at(m.width() - 1, y)) return true;
  }
  return false;
}

std::vector<std::string> lines_of(const fs::path& file) {
  std::istringstream in(geosal::testing::read_bytes(file));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

/// Saves scenes as an image/truth directory pair.
void write_pairs(const std::vector<SynthScene>& scenes, const fs::path& images, const fs::path& truth) {
  fs::create_directories(images);
  fs::create_directories(truth);
  for (const auto& s : scenes) {
    save_image(s.image, images / (s.stem + ".png"));
    save_mask(s.truth, truth / (s.stem + ".png"));
  }
}

}  // namespace

TEST_CASE("lattice geometry for the default size") {
  const auto g = lattice_geometry(160, 120);
  CHECK(g.bar == 4);
  CHECK(g.check == 5);
  // Default reach (160 + 120) / 30 spans a full period; half of it does not
  // span a bar.
  CHECK(g.period() < 280.0 / 30.0);
  CHECK(g.bar >= 280.0 / 60.0 - 1.0);
}

TEST_CASE("scenes are valid and reproducible") {
  const auto start = std::chrono::steady_clock::now();
  const auto scenes = synth_dataset(77, 20);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10.0);
  REQUIRE(scenes.size() == 20);
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const auto& s = scenes[i];
    CHECK(s.image.width() == 160);
    CHECK(s.image.height() == 120);
    CHECK(s.truth.same_shape(s.image));
    const double fraction = static_cast<double>(s.truth.count()) / static_cast<double>(s.truth.size());
    CHECK(fraction >= 0.15);
    CHECK(fraction <= 0.5);
    CHECK_FALSE(touches_frame(s.truth));
    CHECK(s.background == static_cast<Background>(i % 3));
  }
  CHECK(scenes[3].stem == "scene_003");

  const auto again = synth_scene(77, 5);
  CHECK(again.image == scenes[5].image);
  CHECK(again.truth == scenes[5].truth);
  CHECK_FALSE(synth_scene(78, 5).image == scenes[5].image);
}

TEST_CASE("generated files are byte identical across runs") {
  TempDir dir("synth");
  synth_generate(5, 4, dir / "a");
  synth_generate(5, 4, dir / "b");
  for (const char* rel : {"images/scene_000.png", "truth/scene_003.png", "manifest.csv"}) {
    const auto a = geosal::testing::read_bytes(dir / "a" / rel);
    CHECK_FALSE(a.empty());
    CHECK(a == geosal::testing::read_bytes(dir / "b" / rel));
  }
  const auto manifest = lines_of(dir / "a" / "manifest.csv");
  REQUIRE(manifest.size() == 5);
  CHECK(manifest[0] == "stem,background");
  CHECK(manifest[2] == "scene_001,checkerboard");
}

TEST_CASE("cut modes") {
  CHECK(parse_cut_mode("adaptive") == CutMode::Adaptive);
  CHECK(parse_cut_mode("gc") == CutMode::Hierarchical);
  CHECK_FALSE(parse_cut_mode("bogus").has_value());
  CHECK(to_string(CutMode::Hierarchical) == "hierarchical");
}

TEST_CASE("a map equal to its truth scores perfectly") {
  const auto scenes = synth_dataset(3, 3);
  for (auto mode : {CutMode::Adaptive, CutMode::Hierarchical}) {
    BatchOptions opts;
    opts.mode = mode;
    for (const auto& s : scenes) {
      Raster<double> v(s.truth.width(), s.truth.height());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.truth[i] ? 1.0 : 0.0;
      const auto r = score_saliency(s.stem, SaliencyMap(std::move(v)), s.truth, opts);
      CHECK(r.metrics.f_measure == 1.0);
    }
  }
}

TEST_CASE("batch over directories") {
  TempDir dir("batch");
  const auto scenes = synth_dataset(11, 4);
  write_pairs(scenes, dir / "images", dir / "truth");

  BatchOptions opts;
  const auto base = batch_evaluate(dir / "images", dir / "truth", opts);
  CHECK(base.issues.empty());
  REQUIRE(base.images.size() == 4);
  CHECK(base.images[0].stem == "scene_000");
  CHECK(base.mean_f >= 0.9);

  SUBCASE("thread count does not change results") {
    opts.jobs = 4;
    const auto threaded = batch_evaluate(dir / "images", dir / "truth", opts);
    REQUIRE(threaded.images.size() == base.images.size());
    for (std::size_t i = 0; i < base.images.size(); ++i) {
      CHECK(threaded.images[i].stem == base.images[i].stem);
      CHECK(threaded.images[i].metrics.f_measure == base.images[i].metrics.f_measure);
      CHECK(threaded.images[i].threshold == base.images[i].threshold);
    }
    CHECK(threaded.mean_f == base.mean_f);
  }

  SUBCASE("unpaired and mismatched files are skipped and reported") {
    fs::remove(dir / "truth" / "scene_001.png");
    save_mask(BinaryMask(3, 3), dir / "truth" / "orphan.png");
    save_mask(BinaryMask(10, 10), dir / "truth" / "scene_002.png");
    std::ofstream(dir / "images" / "readme.txt") << "not an image";
    const auto r = batch_evaluate(dir / "images", dir / "truth", opts);
    REQUIRE(r.images.size() == 2);
    CHECK(r.images[0].stem == "scene_000");
    CHECK(r.images[1].stem == "scene_003");
    std::vector<std::string> stems;
    for (const auto& issue : r.issues) stems.push_back(issue.stem);
    std::sort(stems.begin(), stems.end());
    CHECK(stems == std::vector<std::string>{"orphan", "scene_001", "scene_002"});
  }

  SUBCASE("precomputed maps") {
    fs::create_directories(dir / "maps");
    for (const auto& s : scenes) save_gray(quantize(geodesic_saliency(s.image)), dir / "maps" / (s.stem + ".png"));
    const auto maps = evaluate_saliency_maps(dir / "maps", dir / "truth", opts);
    REQUIRE(maps.images.size() == 4);
    CHECK(maps.mean_f == doctest::Approx(base.mean_f).epsilon(1e-12));
  }

  SUBCASE("report files") {
    write_reports(base, dir / "out");
    const auto per_image = lines_of(dir / "out" / "per_image.csv");
    REQUIRE(per_image.size() == 5);
    CHECK(per_image[0] == "stem,precision,recall,f,threshold");
    CHECK(per_image[1].rfind("scene_000,", 0) == 0);
    const auto curve = lines_of(dir / "out" / "pr_curve.csv");
    REQUIRE(curve.size() == 257);
    CHECK(curve[0] == "threshold,mean_precision,mean_recall");
    CHECK(curve[256].rfind("255,", 0) == 0);
    const auto summary = lines_of(dir / "out" / "summary.csv");
    REQUIRE(summary.size() == 2);
    CHECK(summary[0] == "mode,k_t,mean_p,mean_r,mean_f");
    CHECK(summary[1].rfind("hierarchical,30,", 0) == 0);
  }
}
