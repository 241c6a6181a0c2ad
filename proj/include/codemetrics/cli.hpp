#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codemetrics/diagnostics.hpp"
#include "codemetrics/quality_model.hpp"
#include "codemetrics/report.hpp"

namespace codemetrics {

/// Bad command line or config contents. Exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text. Exit code 0.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable root, config or report file, or nothing admitted. Exit code 1.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Analyze, Compare };

inline const std::vector<std::string> kDefaultExtensions = {".cc", ".cpp", ".cxx", ".hh", ".hpp", ".h", ".icc"};

struct RunConfig {
    Mode mode = Mode::Analyze;
    std::vector<std::filesystem::path> roots;
    std::vector<std::string> extensions = kDefaultExtensions;
    std::vector<std::string> excludes;
    Format format = Format::Table;
    std::optional<std::filesystem::path> out;
    std::string label;
    bool wmc_unit = false;
    CapTable caps = CapTable::defaults();
    Weights weights;
    unsigned jobs = 1;
    bool per_file = false;
    bool per_class = false;
    bool per_function = false;
    bool quiet = false;
    std::optional<std::filesystem::path> config_path;
    std::filesystem::path before_report;  // compare mode
    std::filesystem::path after_report;
};

/// Throws UsageError, HelpRequested, or IoError for a missing --config file.
RunConfig parse_args(int argc, const char* const* argv);

/// Applies an INI config ([caps], [weights], [admission]) onto `config`.
/// Throws ConfigError for unknown sections/keys or invalid values.
void apply_config_text(std::string_view ini_text, RunConfig& config);

/// "a, b,,c" -> {"a", "b", "c"}
std::vector<std::string> split_comma_list(std::string_view text);

/// Prefixes a missing '.' and drops empty entries.
std::vector<std::string> normalize_extensions(const std::vector<std::string>& raw);

/// Glob over '/'-separated paths: `*` and `?` stay within a segment,
/// `**` spans segments, and a leading `**/` also matches zero segments.
bool glob_match(std::string_view pattern, std::string_view path);

struct AdmittedFile {
    std::filesystem::path path;
    std::string display;  // '/'-separated, relative to its root
};

/// Sorted admitted files under the roots. Symlinks are skipped; excludes are
/// matched against the display path after the extension filter.
/// Throws IoError for an unreadable root or an empty result.
std::vector<AdmittedFile> walk_and_admit(const RunConfig& config, Diagnostics* diags = nullptr);

/// 16 hex digits of FNV-1a 64 over caps, weights, extensions and WMC mode.
std::string config_fingerprint(const RunConfig& config);

/// Reads and analyzes every file on `config.jobs` workers, then builds the graph.
ScanResult scan_corpus(const std::vector<AdmittedFile>& files, unsigned jobs, Diagnostics* diags);

/// Executes a parsed config. Reports go to `out` (or --out); diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace codemetrics
