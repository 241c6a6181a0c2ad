#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemetrics/diagnostics.hpp"
#include "codemetrics/oo_metrics.hpp"
#include "codemetrics/quality_model.hpp"
#include "codemetrics/source_model.hpp"

namespace codemetrics {

struct AggregateStats {
    std::string metric;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double total = 0.0;
    std::size_t count = 0;

    bool operator==(const AggregateStats&) const = default;
};

/// Exact min/max/total, mean = total / count. Throws AnalysisError on an empty list.
AggregateStats aggregate(std::span<const double> values, std::string_view metric);

/// Statistic names in report order: min, max, mean, total, count.
inline constexpr std::array<std::string_view, 5> kStatistics = {"min", "max", "mean", "total", "count"};
double statistic(const AggregateStats& s, std::string_view name);

struct FileDetail {
    std::string path;
    MetricVector metrics{EntityKind::File};

    bool operator==(const FileDetail&) const = default;
};

struct FunctionDetail {
    std::string file;
    std::string owner;  // empty for free functions
    std::string name;
    std::uint32_t start_line = 0;
    std::uint32_t end_line = 0;
    std::uint32_t loc = 0;
    std::uint32_t mcc_traditional = 1;
    std::uint32_t mcc_modified = 1;

    bool operator==(const FunctionDetail&) const = default;
};

struct SnapshotReport {
    std::string label;
    std::size_t files = 0;
    std::vector<AggregateStats> size;                     // per file: LOC, BLOC, CLOC
    std::vector<AggregateStats> distribution;             // per file: Statements, Methods
    std::vector<AggregateStats> complexity_per_file;      // per-file MCC sums
    std::vector<AggregateStats> complexity_per_function;  // per function: MCC, LOC
    std::vector<AggregateStats> oo;                       // per class: CK suite, Methods
    MaintainabilityReport maintainability;
    std::string config_fingerprint;
    std::string tool_version;
    std::size_t diagnostic_count = 0;
    std::optional<std::vector<FileDetail>> per_file;
    std::optional<std::vector<ClassMetrics>> per_class;
    std::optional<std::vector<FunctionDetail>> per_function;

    bool operator==(const SnapshotReport&) const = default;
};

/// Aggregate blocks with their names and entity kinds, in report order.
struct BlockView {
    std::string_view name;
    std::string_view entity_kind;
    const std::vector<AggregateStats>* stats;
};
std::array<BlockView, 5> blocks(const SnapshotReport& report);

struct ScanResult {
    std::vector<SourceFileRecord> files;
    ClassGraph graph;
    std::size_t diagnostic_count = 0;
};

struct ReportOptions {
    std::string label;
    CapTable caps = CapTable::defaults();
    Weights weights;
    RelationMatrix matrix = RelationMatrix::maintainability_default();
    WmcWeighting wmc = WmcWeighting::Complexity;
    std::string config_fingerprint;
    bool per_file = false;
    bool per_class = false;
    bool per_function = false;
};

std::string tool_version();

/// Throws AnalysisError("empty corpus") when no files were scanned.
SnapshotReport build_snapshot_report(const ScanResult& scan, const ReportOptions& options);

enum class Trend { Increasing, Decreasing, Flat };
std::string_view trend_name(Trend t);

struct ReleaseDelta {
    std::string block;  // "snapshot", "maintainability" or an aggregate block name
    std::string metric;
    std::string statistic;
    double before = 0.0;
    double after = 0.0;
    double delta = 0.0;
    std::optional<double> percent;  // absent when `before` is 0 and `after` is not
    Trend trend = Trend::Flat;

    bool operator==(const ReleaseDelta&) const = default;
};

/// One delta per statistic present in both reports, plus Files and the
/// maintainability scores. Differing config fingerprints produce a warning.
/// Throws AnalysisError when the reports share no aggregate metric.
std::vector<ReleaseDelta> compare_snapshots(const SnapshotReport& before, const SnapshotReport& after,
                                            Diagnostics* diags = nullptr);

enum class Format { Json, Csv, Table };

/// Throws std::invalid_argument for anything but json, csv, table.
Format parse_format(std::string_view name);

std::string serialize(const SnapshotReport& report, Format format);
std::string serialize(std::span<const ReleaseDelta> deltas, Format format);

/// Inverse of serialize(report, Format::Json). Throws ReportFormatError.
SnapshotReport parse_report_json(std::string_view text);

/// Shortest round-trip decimal form of a value ("3", "0.625").
std::string format_number(double value);

}  // namespace codemetrics
