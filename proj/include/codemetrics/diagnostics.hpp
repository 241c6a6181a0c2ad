#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace codemetrics {

enum class Severity { Warning, Error };

/// A non-fatal finding attached to a file and line (line 0 = whole file).
struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string file;
    std::uint32_t line = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline void warn(Diagnostics* sink, std::uint32_t line, std::string message) {
    if (sink != nullptr) {
        sink->push_back({Severity::Warning, {}, line, std::move(message)});
    }
}

/// "file:line: warning: message"
std::string format_diagnostic(const Diagnostic& d);

/// Fatal analysis failure (inheritance cycle, empty corpus, ...).
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid cap table, weight or config value.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Serialized report that cannot be read back.
class ReportFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace codemetrics
