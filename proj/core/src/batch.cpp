#include "geosal/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <thread>

#include "geosal/image_io.hpp"

namespace fs = std::filesystem;

namespace geosal {

std::string_view to_string(CutMode mode) {
  return mode == CutMode::Adaptive ? "adaptive" : "hierarchical";
}

std::optional<CutMode> parse_cut_mode(std::string_view text) {
  if (text == "adaptive" || text == "gs") return CutMode::Adaptive;
  if (text == "hierarchical" || text == "gc") return CutMode::Hierarchical;
  return std::nullopt;
}

ImageResult score_saliency(std::string stem, const SaliencyMap& map, const BinaryMask& truth,
                           const BatchOptions& options) {
  const GrayMap quantized = quantize(map);
  ImageResult r;
  r.stem = std::move(stem);
  if (options.mode == CutMode::Adaptive) {
    r.threshold = adaptive_threshold(quantized);
  } else {
    r.threshold = hierarchical_cut(map, options.smoothing_window).selected;
  }
  r.metrics = evaluate(apply_threshold(quantized, r.threshold), truth, options.beta2);
  r.curve = pr_curve(quantized, truth);
  return r;
}

namespace {

// Runs task(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& task) {
  const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
}

struct Outcome {
  std::optional<ImageResult> result;
  std::string error;
};

BatchReport aggregate(std::vector<Outcome> outcomes, std::vector<BatchIssue> issues,
                      std::span<const std::string> stems, const BatchOptions& options) {
  BatchReport report;
  report.mode = options.mode;
  report.k_t = options.params.k_t;
  report.issues = std::move(issues);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].result) {
      report.images.push_back(std::move(*outcomes[i].result));
    } else {
      report.issues.push_back({stems[i], outcomes[i].error});
    }
  }
  std::ranges::sort(report.images, {}, &ImageResult::stem);
  std::ranges::stable_sort(report.issues, {}, &BatchIssue::stem);

  std::vector<PrCurve> curves;
  for (const auto& img : report.images) {
    report.mean_precision += img.metrics.precision;
    report.mean_recall += img.metrics.recall;
    report.mean_f += img.metrics.f_measure;
    curves.push_back(img.curve);
  }
  if (!report.images.empty()) {
    const auto n = static_cast<double>(report.images.size());
    report.mean_precision /= n;
    report.mean_recall /= n;
    report.mean_f /= n;
  }
  report.mean_curve = mean_curve(curves);
  return report;
}

struct FilePair {
  std::string stem;
  fs::path input;
  fs::path truth;
};

std::map<std::string, fs::path> images_by_stem(const fs::path& dir, std::vector<BatchIssue>& issues) {
  std::map<std::string, fs::path> out;
  if (!fs::is_directory(dir)) throw ImageIoError(ImageIoError::Kind::Unreadable, "not a directory: " + dir.string());
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || !is_supported_image(entry.path())) continue;
    const auto stem = entry.path().stem().string();
    auto [it, inserted] = out.emplace(stem, entry.path());
    if (!inserted) {
      // Directory order is unspecified; keep the lexicographically first path.
      if (entry.path() < it->second) it->second = entry.path();
      issues.push_back({stem, "several files share this stem in " + dir.string() +
                                  "; using the lexicographically first"});
    }
  }
  return out;
}

std::vector<FilePair> pair_files(const fs::path& input_dir, const fs::path& truth_dir,
                                 std::vector<BatchIssue>& issues) {
  const auto inputs = images_by_stem(input_dir, issues);
  const auto truths = images_by_stem(truth_dir, issues);
  std::vector<FilePair> pairs;
  for (const auto& [stem, path] : inputs) {
    const auto t = truths.find(stem);
    if (t == truths.end()) {
      issues.push_back({stem, "no ground-truth mask in " + truth_dir.string()});
      continue;
    }
    pairs.push_back({stem, path, t->second});
  }
  for (const auto& [stem, path] : truths) {
    if (!inputs.contains(stem)) issues.push_back({stem, "ground-truth mask has no matching input"});
  }
  return pairs;
}

template <class Score>
BatchReport run_pairs(const fs::path& input_dir, const fs::path& truth_dir,
                      const BatchOptions& options, Score score) {
  options.params.validate();
  std::vector<BatchIssue> issues;
  const auto pairs = pair_files(input_dir, truth_dir, issues);
  std::vector<Outcome> outcomes(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    try {
      const BinaryMask truth = load_mask(pairs[i].truth);
      outcomes[i].result = score(pairs[i], truth);
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  });
  std::vector<std::string> stems;
  for (const auto& p : pairs) stems.push_back(p.stem);
  return aggregate(std::move(outcomes), std::move(issues), stems, options);
}

void check_size(const BinaryMask& truth, int width, int height, const std::string& stem) {
  if (truth.width() != width || truth.height() != height) {
    throw ImageIoError(ImageIoError::Kind::DimensionMismatch,
                       "ground truth for " + stem + " does not match the input size");
  }
}

}  // namespace

BatchReport evaluate_samples(std::span<const Sample> samples, const BatchOptions& options) {
  options.params.validate();
  std::vector<Outcome> outcomes(samples.size());
  parallel_for(samples.size(), options.jobs, [&](std::size_t i) {
    const auto& s = samples[i];
    try {
      check_size(s.truth, s.image.width(), s.image.height(), s.stem);
      outcomes[i].result = score_saliency(s.stem, geodesic_saliency(s.image, options.params), s.truth, options);
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  });
  std::vector<std::string> stems;
  for (const auto& s : samples) stems.push_back(s.stem);
  return aggregate(std::move(outcomes), {}, stems, options);
}

BatchReport batch_evaluate(const fs::path& image_dir, const fs::path& truth_dir, const BatchOptions& options) {
  return run_pairs(image_dir, truth_dir, options, [&](const FilePair& p, const BinaryMask& truth) {
    const RgbImage image = load_image(p.input);
    check_size(truth, image.width(), image.height(), p.stem);
    return score_saliency(p.stem, geodesic_saliency(image, options.params), truth, options);
  });
}

BatchReport evaluate_saliency_maps(const fs::path& map_dir, const fs::path& truth_dir,
                                   const BatchOptions& options) {
  return run_pairs(map_dir, truth_dir, options, [&](const FilePair& p, const BinaryMask& truth) {
    const GrayMap gray = load_gray(p.input);
    check_size(truth, gray.width(), gray.height(), p.stem);
    Raster<double> values(gray.width(), gray.height());
    for (std::size_t i = 0; i < gray.size(); ++i) values[i] = gray[i] / 255.0;
    return score_saliency(p.stem, SaliencyMap(std::move(values)), truth, options);
  });
}

namespace {

std::ofstream open_csv(const fs::path& file) {
  std::ofstream out(file);
  if (!out) throw ImageIoError(ImageIoError::Kind::WriteFailed, "cannot write " + file.string());
  out << std::setprecision(10);
  return out;
}

}  // namespace

void write_summary(std::span<const BatchReport> reports, const fs::path& file) {
  auto out = open_csv(file);
  out << "mode,k_t,mean_p,mean_r,mean_f\n";
  for (const auto& r : reports) {
    out << to_string(r.mode) << ',' << r.k_t << ',' << r.mean_precision << ',' << r.mean_recall << ','
        << r.mean_f << '\n';
  }
}

void write_reports(const BatchReport& report, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  {
    auto out = open_csv(out_dir / "per_image.csv");
    out << "stem,precision,recall,f,threshold\n";
    for (const auto& img : report.images) {
      out << img.stem << ',' << img.metrics.precision << ',' << img.metrics.recall << ','
          << img.metrics.f_measure << ',' << int{img.threshold} << '\n';
    }
  }
  {
    auto out = open_csv(out_dir / "pr_curve.csv");
    out << "threshold,mean_precision,mean_recall\n";
    for (const auto& p : report.mean_curve.points) {
      out << int{p.threshold} << ',' << p.precision << ',' << p.recall << '\n';
    }
  }
  write_summary(std::span(&report, 1), out_dir / "summary.csv");
}

}  // namespace geosal
