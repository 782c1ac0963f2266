#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "geosal/cut.hpp"
#include "geosal/image_io.hpp"
#include "geosal/saliency.hpp"
#include "geosal/synth.hpp"

namespace fs = std::filesystem;

namespace geosal::cli {

TunnelParams RunConfig::tunnel_params() const {
  TunnelParams p;
  p.k_t = k_t;
  p.sigma_d_raw = sigma_d_raw;
  if (connectivity != 4 && connectivity != 8) throw std::invalid_argument("--connectivity must be 4 or 8");
  p.connectivity = connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
  p.tunnel_stride = tunnel_stride;
  p.exact_tunnels = exact_tunnels;
  p.validate();
  return p;
}

void RunConfig::validate() const {
  tunnel_params();
  if (smoothing_window < 1 || smoothing_window % 2 == 0) {
    throw std::invalid_argument("--smooth must be a positive odd number");
  }
  if (threshold && (*threshold < 0 || *threshold > 255)) throw std::invalid_argument("--threshold must be in 0..255");
  if (mode != "adaptive" && mode != "hierarchical" && mode != "both") {
    throw std::invalid_argument("--mode must be adaptive, hierarchical or both");
  }
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  for (double k : k_t_values) {
    if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("--k-t-values entries must be positive");
  }
}

RgbImage render_jet(const GrayMap& map) {
  RgbImage out(map.width(), map.height());
  auto channel = [](double v, double center) {
    return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(1.5 - std::abs(4.0 * v - center), 0.0, 1.0)));
  };
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double v = map[i] / 255.0;
    out[i] = {channel(v, 3.0), channel(v, 2.0), channel(v, 1.0)};
  }
  return out;
}

namespace {

fs::path default_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  return env && *env ? fs::path(env) : fs::path(".");
}

fs::path output_or_default(const RunConfig& config, const std::string& suffix) {
  if (!config.output.empty()) return config.output;
  return default_dir() / (config.input.stem().string() + suffix);
}

void ensure_parent(const fs::path& file) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
}

SaliencyMap compute_saliency(const RunConfig& config, const RgbImage& image) {
  const auto params = config.tunnel_params();
  return config.classic ? classic_saliency(image, params.connectivity) : geodesic_saliency(image, params);
}

BatchOptions batch_options(const RunConfig& config, CutMode mode, double k_t) {
  BatchOptions options;
  options.params = config.tunnel_params();
  options.params.k_t = k_t;
  options.mode = mode;
  options.smoothing_window = config.smoothing_window;
  options.jobs = config.jobs;
  return options;
}

void print_report(const BatchReport& r, std::ostream& out) {
  out << to_string(r.mode) << " k_t=" << r.k_t << " images=" << r.images.size()
      << " mean_p=" << r.mean_precision << " mean_r=" << r.mean_recall << " mean_f=" << r.mean_f << '\n';
  for (const auto& issue : r.issues) out << "skipped " << issue.stem << ": " << issue.message << '\n';
}

std::vector<CutMode> modes_for(const std::string& mode) {
  if (mode == "both") return {CutMode::Adaptive, CutMode::Hierarchical};
  return {*parse_cut_mode(mode)};
}

}  // namespace

int cmd_saliency(const RunConfig& config, std::ostream& out) {
  const RgbImage image = load_image(config.input);
  const SaliencyMap map = compute_saliency(config, image);
  const GrayMap gray = quantize(map);
  const auto target = output_or_default(config, "_saliency.png");
  ensure_parent(target);
  save_gray(gray, target);
  out << "saliency map: " << target.string() << '\n';
  if (!config.color_output.empty()) {
    ensure_parent(config.color_output);
    save_image(render_jet(gray), config.color_output);
    out << "false-color map: " << config.color_output.string() << '\n';
  }
  return kOk;
}

int cmd_cut(const RunConfig& config, std::ostream& out) {
  const RgbImage image = load_image(config.input);
  const SaliencyMap map = compute_saliency(config, image);
  const CutHierarchy cut = hierarchical_cut(map, config.smoothing_window);
  const auto target = output_or_default(config, "_cut.png");
  ensure_parent(target);

  out << "thresholds:";
  for (auto t : cut.thresholds) out << ' ' << int{t};
  out << '\n';

  const fs::path levels_dir = config.levels_dir.empty() ? target.parent_path() : config.levels_dir;
  if (!levels_dir.empty()) fs::create_directories(levels_dir);
  for (std::size_t i = 0; i < cut.thresholds.size(); ++i) {
    const auto name = target.stem().string() + "_level" + std::to_string(i) + "_t" +
                      std::to_string(int{cut.thresholds[i]}) + ".png";
    save_mask(cut.masks[i], levels_dir / name);
    out << "level " << i << ": " << (levels_dir / name).string() << '\n';
  }

  if (config.threshold) {
    const auto t = static_cast<std::uint8_t>(*config.threshold);
    save_mask(apply_threshold(quantize(map), t), target);
    out << "selected: " << int{t} << " (manual)\n";
  } else {
    save_mask(cut.selected_mask, target);
    if (cut.fallback) {
      out << "selected: " << int{cut.selected} << " (no histogram valley, fallback to twice-mean)\n";
    } else {
      out << "selected: " << int{cut.selected} << " (closest to twice-mean " << int{adaptive_threshold(map)}
          << ")\n";
    }
  }
  out << "mask: " << target.string() << '\n';
  return kOk;
}

int cmd_extract(const RunConfig& config, std::ostream& out) {
  const RgbImage image = load_image(config.input);
  BinaryMask mask;
  if (!config.mask_input.empty()) {
    mask = load_mask(config.mask_input);
  } else {
    const SaliencyMap map = compute_saliency(config, image);
    mask = config.threshold ? apply_threshold(quantize(map), static_cast<std::uint8_t>(*config.threshold))
                            : hierarchical_cut(map, config.smoothing_window).selected_mask;
  }
  const auto target = output_or_default(config, "_extract.png");
  ensure_parent(target);
  save_rgba(image, mask, target);
  out << "foreground pixels: " << mask.count() << " of " << mask.size() << '\n';
  out << "cutout: " << target.string() << '\n';
  return kOk;
}

int cmd_eval(const RunConfig& config, std::ostream& out) {
  const fs::path report_dir = config.output.empty() ? default_dir() / "report" : config.output;
  const auto modes = modes_for(config.mode);
  std::vector<BatchReport> reports;
  bool incomplete = false;
  for (auto mode : modes) {
    const auto options = batch_options(config, mode, config.k_t);
    auto report = config.maps_dir.empty() ? batch_evaluate(config.images_dir, config.truth_dir, options)
                                          : evaluate_saliency_maps(config.maps_dir, config.truth_dir, options);
    const fs::path dir = modes.size() == 1 ? report_dir : report_dir / std::string(to_string(mode));
    write_reports(report, dir);
    print_report(report, out);
    incomplete = incomplete || !report.issues.empty();
    reports.push_back(std::move(report));
  }
  if (modes.size() > 1) write_summary(reports, report_dir / "summary.csv");
  out << "reports: " << report_dir.string() << '\n';
  return incomplete ? kIncomplete : kOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
  const fs::path root = config.output.empty() ? default_dir() / "bench" : config.output;
  const fs::path data = root / "data";
  synth_generate(config.seed, config.count, data);
  out << "generated " << config.count << " scenes in " << data.string() << '\n';

  std::vector<BatchReport> reports;
  bool incomplete = false;
  for (double k : config.k_t_values) {
    for (auto mode : modes_for(config.mode)) {
      auto report = batch_evaluate(data / "images", data / "truth", batch_options(config, mode, k));
      std::ostringstream name;
      name << "kt" << k << '_' << to_string(mode);
      write_reports(report, root / name.str());
      print_report(report, out);
      incomplete = incomplete || !report.issues.empty();
      reports.push_back(std::move(report));
    }
  }
  write_summary(reports, root / "summary.csv");
  out << "summary: " << (root / "summary.csv").string() << '\n';
  return incomplete ? kIncomplete : kOk;
}

int cmd_synth(const RunConfig& config, std::ostream& out) {
  const fs::path root = config.output.empty() ? default_dir() / "synth" : config.output;
  synth_generate(config.seed, config.count, root);
  out << "generated " << config.count << " scenes in " << root.string() << '\n';
  return kOk;
}

namespace {

void add_tunnel_options(CLI::App* cmd, RunConfig& c, int& stride) {
  cmd->add_option("--k-t", c.k_t, "Tunnel reach divisor; sigma_r = (W+H)/k_t")->capture_default_str();
  cmd->add_option("--sigma-d", c.sigma_d_raw, "Tunnel color budget, raw 8-bit RGB distance")->capture_default_str();
  cmd->add_option("--connectivity", c.connectivity, "Grid connectivity (4 or 8)")->capture_default_str();
  cmd->add_option("--stride", stride, "Spacing of sampled tunnel endpoints (default sigma_r/8)");
  cmd->add_flag("--exact-tunnels", c.exact_tunnels, "Enumerate every tunnel endpoint in the disc");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  int stride = 0;
  int threshold = -1;

  CLI::App app{"Geodesic-tunneling salient object detection"};
  app.name("geosal");
  app.require_subcommand(1);

  auto* sal = app.add_subcommand("saliency", "Write the grayscale saliency map of an image");
  sal->add_option("-i,--input", c.input, "Input image")->required();
  sal->add_option("-o,--output", c.output, "Output map (png)");
  sal->add_option("--color", c.color_output, "Also write a false-color rendering here");
  sal->add_flag("--classic", c.classic, "Disable tunnels");
  add_tunnel_options(sal, c, stride);

  auto* cut = app.add_subcommand("cut", "Hierarchical saliency cut: selected mask plus one mask per level");
  cut->add_option("-i,--input", c.input, "Input image")->required();
  cut->add_option("-o,--output", c.output, "Selected mask (png)");
  cut->add_option("--levels-dir", c.levels_dir, "Directory for per-level masks (default: next to output)");
  cut->add_option("--threshold", threshold, "Use this threshold instead of the automatic pick");
  cut->add_option("--smooth", c.smoothing_window, "Histogram smoothing window (odd)")->capture_default_str();
  cut->add_flag("--classic", c.classic, "Disable tunnels");
  add_tunnel_options(cut, c, stride);

  auto* ext = app.add_subcommand("extract", "Write the salient object as an RGBA cutout");
  ext->add_option("-i,--input", c.input, "Input image")->required();
  ext->add_option("-o,--output", c.output, "Output cutout (png)");
  ext->add_option("--mask", c.mask_input, "Use this mask instead of computing a cut");
  ext->add_option("--threshold", threshold, "Use this threshold instead of the automatic pick");
  ext->add_option("--smooth", c.smoothing_window, "Histogram smoothing window (odd)")->capture_default_str();
  ext->add_flag("--classic", c.classic, "Disable tunnels");
  add_tunnel_options(ext, c, stride);

  auto* eval = app.add_subcommand("eval", "Score a dataset against ground-truth masks and write CSV reports");
  eval->add_option("--images", c.images_dir, "Directory of input images");
  eval->add_option("--truth", c.truth_dir, "Directory of ground-truth masks")->required();
  eval->add_option("--maps", c.maps_dir, "Score these precomputed grayscale saliency maps instead");
  eval->add_option("-o,--output", c.output, "Report directory");
  eval->add_option("--mode", c.mode, "adaptive, hierarchical or both")->capture_default_str();
  eval->add_option("--smooth", c.smoothing_window, "Histogram smoothing window (odd)")->capture_default_str();
  eval->add_option("-j,--jobs", c.jobs, "Worker threads")->capture_default_str();
  add_tunnel_options(eval, c, stride);

  auto* bench = app.add_subcommand("bench", "Generate the synthetic benchmark and sweep k_t");
  bench->add_option("-o,--output", c.output, "Benchmark directory");
  bench->add_option("--seed", c.seed, "Dataset seed")->capture_default_str();
  bench->add_option("--count", c.count, "Number of scenes")->capture_default_str();
  bench->add_option("--k-t-values", c.k_t_values, "k_t values to sweep")->delimiter(',');
  bench->add_option("--mode", c.mode, "adaptive, hierarchical or both (default: both)");
  bench->add_option("--smooth", c.smoothing_window, "Histogram smoothing window (odd)")->capture_default_str();
  bench->add_option("-j,--jobs", c.jobs, "Worker threads")->capture_default_str();
  add_tunnel_options(bench, c, stride);

  auto* synth = app.add_subcommand("synth", "Generate synthetic scenes with exact ground truth");
  synth->add_option("-o,--output", c.output, "Dataset directory");
  synth->add_option("--seed", c.seed, "Dataset seed")->capture_default_str();
  synth->add_option("--count", c.count, "Number of scenes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  auto* chosen = app.get_subcommands().front();
  if (chosen->get_option_no_throw("--stride") && chosen->count("--stride") > 0) c.tunnel_stride = stride;
  if (chosen->get_option_no_throw("--threshold") && chosen->count("--threshold") > 0) c.threshold = threshold;
  if (c.command == "bench" && chosen->count("--mode") == 0) c.mode = "both";
  if (c.command == "eval" && c.images_dir.empty() && c.maps_dir.empty()) {
    err << "eval needs --images or --maps\n";
    return kUsage;
  }

  try {
    c.validate();
    if (c.command == "saliency") return cmd_saliency(c, out);
    if (c.command == "cut") return cmd_cut(c, out);
    if (c.command == "extract") return cmd_extract(c, out);
    if (c.command == "eval") return cmd_eval(c, out);
    if (c.command == "bench") return cmd_bench(c, out);
    if (c.command == "synth") return cmd_synth(c, out);
  } catch (const ImageIoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace geosal::cli
