#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace peglab::cli {

namespace fs = std::filesystem;

enum class Mode { exact, floating };

struct RunConfig {
  std::string command;  ///< e.g. "find-square", "adf check"
  std::vector<fs::path> curves;
  std::optional<fs::path> curve;
  std::optional<fs::path> instance;
  std::optional<fs::path> trace;
  Mode mode = Mode::exact;

  std::optional<int> grid;
  double tol = 1e-12;
  bool all = false;
  double s = 0.0;
  double r = 1.0;
  double n = 1.0;
  int periods = 1;
  std::optional<std::string> x;
  std::optional<std::string> point;
  std::optional<std::string> L;
  std::optional<std::string> R;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
  int kmax = 3;
  bool random = false;
  std::string box = "8";

  std::optional<fs::path> svg;
  std::optional<fs::path> json;
  std::vector<fs::path> out;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFinding = 2;

/// Dispatches one subcommand.  The JSON report goes to `out` unless
/// config.json is set, in which case `out` gets a one-line summary.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (PEGLAB_MODE overrides --mode) and runs.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace peglab::cli
