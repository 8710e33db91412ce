#pragma once

// Command-line front end for reqcsim.
//
// Options come from three layers: flags override values from a
// `--config` file, which override built-in defaults (REQCSIM_SEED, when
// set, replaces the built-in seed default). Config files are flat
// `key = value` lines with `#` comments.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace reqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitPhysics = 3;
inline constexpr int kExitCheckFailed = 4;

/// Bad flag, key or value. The message names the offending token.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string output;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  // fidelity-sweep
  std::string variant = "symmetrized_bb1";
  double coupling = 100.0;
  std::string delta_range = "-0.05:0.05:0.0025";
  std::string omega_range = "auto";

  // cat-parity
  int n = 4;
  std::string phis = "0:3.2:0.1";
  double delta_width = 0.0;
  double omega_width = 0.0;
  double g_min = 100.0;
  double g_max = 100.0;
  int instances = 1;
  std::string cps = "symmetrized";
  std::string policy = "plain";

  // yield
  int ion_count = 20000;
  double box_side = 1.0;
  double dipole_constant = 1.0;
  int channels = 4;
  double channel_probability = 0.25;
  double target_p = 0.1;
  std::string threshold = "auto";
  std::string n_values = "2,3,4";
  int seed_count = 10;
  bool angular = false;

  bool operator==(const RunConfig&) const = default;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "fidelity-sweep", "gate-check", "cat-parity", "yield", "selftest"};
  return names;
}

/// Parses argv (argv[0] is the program name). Returns false when help was
/// requested and printed to `out`. Throws ConfigError.
bool parse_config(const std::vector<std::string>& args, RunConfig& config,
                  std::ostream& out);

/// `key = value` lines that parse back to the same RunConfig.
std::string render_config(const RunConfig& config);

/// Parses "lo:hi:step" or a comma-separated list.
std::vector<double> parse_values(const std::string& text, const char* key);

/// Runs the subcommand; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run and map errors to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

/// 12 significant digits, scientific notation.
std::string format_double(double value);

}  // namespace reqc::cli
