#pragma once

// Command-line orchestration: configuration, the result cache, and the
// dispatch from command names to reports.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pentaflag/certificate.hpp"
#include "pentaflag/report.hpp"

namespace pentaflag::cli {

inline constexpr std::string_view kModuleVersion = "pentaflag-0.1.0";

enum class Format { text, json };

/// Exit codes of dispatch().
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  /// e.g. {"verify", "certificate"} or {"count", "turan"}.
  std::vector<std::string> command;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> forbid;
  std::vector<int> parts;
  long sweep_max = 1000;
  Format format = Format::text;
  /// Empty disables caching.
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 0;
  bool emit_graph6 = false;
  bool with_n8 = false;

  /// Throws UsageError for unknown commands, missing or out-of-range
  /// arguments.
  void validate() const;
  std::string command_name() const;
};

/// --cache-dir, else $PENTAFLAG_CACHE_DIR, else $XDG_CACHE_HOME/pentaflag,
/// else $HOME/.cache/pentaflag.
std::optional<std::filesystem::path> default_cache_dir();

/// Versioned files keyed by a 64-bit FNV-1a hash of (module version,
/// operation, arguments). Unreadable or mismatching entries are reported
/// on `warn` and treated as misses.
class Cache {
 public:
  Cache(std::optional<std::filesystem::path> dir, std::ostream& warn);
  bool enabled() const { return dir_.has_value(); }
  std::optional<std::string> load(std::string_view operation, std::string_view arguments) const;
  void store(std::string_view operation, std::string_view arguments, const std::string& payload) const;
  std::filesystem::path path_for(std::string_view operation, std::string_view arguments) const;
  std::ostream* warn_stream() const { return warn_; }

 private:
  std::optional<std::filesystem::path> dir_;
  std::ostream* warn_;
};

std::uint64_t fnv1a64(std::string_view data);

struct LoadedMapping {
  cert::IndexMapping mapping;
  report::ClaimResult search_claim;
  bool from_cache = false;
};

/// The cached mapping after re-validation, or a fresh search (stored on
/// success).
LoadedMapping load_mapping(const Cache& cache);

/// Runs the configured command. Throws UsageError for bad configurations.
report::CertificateReport run(const RunConfig& config, std::ostream& warn);

/// Runs and prints the report; returns kExitPass, kExitFail or kExitUsage.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and dispatches.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentaflag::cli
