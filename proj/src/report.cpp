#include "codemetrics/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "codemetrics/size_metrics.hpp"

#ifndef CODEMETRICS_VERSION
#define CODEMETRICS_VERSION "0.0.0"
#endif

namespace codemetrics {

AggregateStats aggregate(std::span<const double> values, std::string_view metric) {
    if (values.empty()) {
        throw AnalysisError("no entities for metric " + std::string(metric));
    }
    AggregateStats s;
    s.metric = std::string(metric);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    s.total = std::accumulate(values.begin(), values.end(), 0.0);
    s.count = values.size();
    s.mean = s.total / static_cast<double>(s.count);
    return s;
}

double statistic(const AggregateStats& s, std::string_view name) {
    if (name == "min") return s.min;
    if (name == "max") return s.max;
    if (name == "mean") return s.mean;
    if (name == "total") return s.total;
    if (name == "count") return static_cast<double>(s.count);
    throw std::invalid_argument("unknown statistic " + std::string(name));
}

std::array<BlockView, 5> blocks(const SnapshotReport& r) {
    return {{
        {"size", "file", &r.size},
        {"distribution", "file", &r.distribution},
        {"complexity_per_file", "file", &r.complexity_per_file},
        {"complexity_per_function", "function", &r.complexity_per_function},
        {"oo", "class", &r.oo},
    }};
}

std::string tool_version() { return std::string("codemetrics ") + CODEMETRICS_VERSION; }

namespace {

template <typename Entity, typename Read>
AggregateStats column(const std::vector<Entity>& entities, Metric metric, Read read) {
    std::vector<double> values;
    values.reserve(entities.size());
    for (const auto& e : entities) {
        values.push_back(static_cast<double>(read(e)));
    }
    return aggregate(values, metric_name(metric));
}

template <typename Entity>
std::vector<AggregateStats> vector_block(const std::vector<Entity>& entities, std::initializer_list<Metric> metrics) {
    std::vector<AggregateStats> out;
    if (!entities.empty()) {
        for (auto m : metrics) {
            out.push_back(column(entities, m, [m](const MetricVector& v) { return v.value_or(m, 0.0); }));
        }
    }
    return out;
}

}  // namespace

SnapshotReport build_snapshot_report(const ScanResult& scan, const ReportOptions& options) {
    if (scan.files.empty()) {
        throw AnalysisError("empty corpus");
    }
    SnapshotReport report;
    report.label = options.label;
    report.files = scan.files.size();
    report.config_fingerprint = options.config_fingerprint;
    report.tool_version = tool_version();
    report.diagnostic_count = scan.diagnostic_count;

    std::vector<MetricVector> file_vectors;
    std::vector<FunctionDetail> functions;
    for (const auto& f : scan.files) {
        file_vectors.push_back(file_size_metrics(f));
        for (const auto& fn : f.functions) {
            functions.push_back({f.path, fn.owner_class.value_or(""), fn.name, fn.start_line, fn.end_line, fn.loc,
                                 fn.mcc_traditional, fn.mcc_modified});
        }
    }
    const auto classes = class_metrics(scan.graph, options.wmc);
    std::vector<MetricVector> class_vectors;
    for (const auto& c : classes) {
        class_vectors.push_back(to_metric_vector(c));
    }

    report.size = vector_block(file_vectors, {Metric::LOC, Metric::BLOC, Metric::CLOC});
    report.distribution = vector_block(file_vectors, {Metric::Statements, Metric::Methods});
    report.complexity_per_file = vector_block(file_vectors, {Metric::MCC_traditional, Metric::MCC_modified});
    if (!functions.empty()) {
        report.complexity_per_function = {
            column(functions, Metric::MCC_traditional, [](const FunctionDetail& f) { return f.mcc_traditional; }),
            column(functions, Metric::MCC_modified, [](const FunctionDetail& f) { return f.mcc_modified; }),
            column(functions, Metric::LOC, [](const FunctionDetail& f) { return f.loc; }),
        };
    }
    if (!class_vectors.empty()) {
        report.oo = vector_block(class_vectors, {Metric::CBO, Metric::DIT, Metric::LCOM, Metric::NOC, Metric::RFC,
                                                 Metric::WMC, Metric::Methods});
    }

    report.maintainability =
        package_maintainability(file_vectors, class_vectors, options.matrix, options.caps, options.weights);

    if (options.per_file) {
        std::vector<FileDetail> details;
        for (std::size_t i = 0; i < scan.files.size(); ++i) {
            details.push_back({scan.files[i].path, file_vectors[i]});
        }
        report.per_file = std::move(details);
    }
    if (options.per_class) {
        report.per_class = classes;
    }
    if (options.per_function) {
        report.per_function = std::move(functions);
    }
    return report;
}

std::string_view trend_name(Trend t) {
    switch (t) {
        case Trend::Increasing: return "Increasing";
        case Trend::Decreasing: return "Decreasing";
        case Trend::Flat: return "Flat";
    }
    return "?";
}

namespace {

ReleaseDelta make_delta(std::string block, std::string metric, std::string statistic, double before, double after) {
    ReleaseDelta d;
    d.block = std::move(block);
    d.metric = std::move(metric);
    d.statistic = std::move(statistic);
    d.before = before;
    d.after = after;
    d.delta = after - before;
    if (before != 0.0) {
        d.percent = 100.0 * d.delta / std::abs(before);
    } else if (after == 0.0) {
        d.percent = 0.0;
    }
    d.trend = d.delta < 0.0 ? Trend::Decreasing : d.delta > 0.0 ? Trend::Increasing : Trend::Flat;
    return d;
}

}  // namespace

std::vector<ReleaseDelta> compare_snapshots(const SnapshotReport& before, const SnapshotReport& after,
                                            Diagnostics* diags) {
    if (before.config_fingerprint != after.config_fingerprint) {
        warn(diags, 0,
             "config fingerprints differ (" + before.config_fingerprint + " vs " + after.config_fingerprint +
                 "); values may not be comparable");
    }
    std::vector<ReleaseDelta> deltas;
    deltas.push_back(make_delta("snapshot", "Files", "total", static_cast<double>(before.files),
                                static_cast<double>(after.files)));
    std::size_t shared = 0;
    const auto before_blocks = blocks(before);
    const auto after_blocks = blocks(after);
    for (std::size_t b = 0; b < before_blocks.size(); ++b) {
        for (const auto& s : *before_blocks[b].stats) {
            const auto& other = *after_blocks[b].stats;
            const auto match = std::find_if(other.begin(), other.end(),
                                            [&](const AggregateStats& x) { return x.metric == s.metric; });
            if (match == other.end()) {
                continue;
            }
            ++shared;
            for (auto stat : kStatistics) {
                deltas.push_back(make_delta(std::string(before_blocks[b].name), s.metric, std::string(stat),
                                            statistic(s, stat), statistic(*match, stat)));
            }
        }
    }
    if (shared == 0) {
        throw AnalysisError("reports share no metrics");
    }
    for (auto c : kAllCriteria) {
        deltas.push_back(make_delta("maintainability", std::string(criterion_name(c)), "score",
                                    before.maintainability.score(c), after.maintainability.score(c)));
    }
    deltas.push_back(make_delta("maintainability", "overall", "score", before.maintainability.overall,
                                after.maintainability.overall));
    return deltas;
}

}  // namespace codemetrics
