#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geosal/batch.hpp"
#include "geosal/geodesic.hpp"
#include "geosal/raster.hpp"

namespace geosal::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIoError = 3,
  kValidation = 4,
  /// A batch finished but skipped some inputs.
  kIncomplete = 5,
};

/// Environment variable naming the directory used when no output path is given.
inline constexpr const char* kOutputDirEnv = "GEOSAL_OUTPUT_DIR";

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path color_output;
  std::filesystem::path mask_input;
  std::filesystem::path levels_dir;
  std::filesystem::path images_dir;
  std::filesystem::path truth_dir;
  std::filesystem::path maps_dir;

  double k_t = 30.0;
  double sigma_d_raw = 24.0;
  int connectivity = 8;
  std::optional<int> tunnel_stride;
  bool exact_tunnels = false;
  bool classic = false;
  int smoothing_window = kDefaultSmoothingWindow;
  std::optional<int> threshold;
  std::string mode = "hierarchical";
  std::vector<double> k_t_values = {15.0, 30.0, 60.0};
  std::uint64_t seed = 1;
  int count = 20;
  int jobs = 1;

  /// TunnelParams built from the numeric flags; throws std::invalid_argument.
  TunnelParams tunnel_params() const;
  /// Checks every numeric flag; throws std::invalid_argument.
  void validate() const;
};

/// Parses argv and runs the chosen subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_saliency(const RunConfig& config, std::ostream& out);
int cmd_cut(const RunConfig& config, std::ostream& out);
int cmd_extract(const RunConfig& config, std::ostream& out);
int cmd_eval(const RunConfig& config, std::ostream& out);
int cmd_bench(const RunConfig& config, std::ostream& out);
int cmd_synth(const RunConfig& config, std::ostream& out);

/// Blue-to-red false-color rendering of a saliency map, for viewing only.
RgbImage render_jet(const GrayMap& map);

}  // namespace geosal::cli
