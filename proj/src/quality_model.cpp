#include "codemetrics/quality_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "codemetrics/diagnostics.hpp"

namespace codemetrics {

namespace {

constexpr std::array<std::string_view, 4> kCriterionNames = {"Analyzability", "Changeability", "Stability",
                                                             "Testability"};

// Columns: LOC CLOC Statements Methods MCC_trad MCC_mod CBO DIT NOC LCOM RFC WMC.
constexpr std::array<std::string_view, 4> kDefaultRows = {
    "IIIIIIIIiIII",  // Analyzability
    "IIIIIIIIIIII",  // Changeability
    "iiiiiiIiiIii",  // Stability
    "IIIIIIIIiIII",  // Testability
};

bool file_granular(Metric m) {
    return m == Metric::LOC || m == Metric::CLOC || m == Metric::Statements || m == Metric::MCC_traditional ||
           m == Metric::MCC_modified;
}

}  // namespace

std::string_view criterion_name(Criterion c) { return kCriterionNames[static_cast<std::size_t>(c)]; }

std::optional<Criterion> criterion_from_name(std::string_view name) {
    for (auto c : kAllCriteria) {
        if (criterion_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

RelationMatrix RelationMatrix::maintainability_default() {
    RelationMatrix matrix;
    for (auto row : kAllCriteria) {
        const auto letters = kDefaultRows[static_cast<std::size_t>(row)];
        for (std::size_t col = 0; col < kColumns.size(); ++col) {
            matrix.set(row, kColumns[col],
                       letters[col] == 'I' ? RelationStrength::StrongInverse : RelationStrength::Inverse);
        }
    }
    return matrix;
}

std::size_t RelationMatrix::column_index(Metric m) {
    const auto it = std::find(kColumns.begin(), kColumns.end(), m);
    if (it == kColumns.end()) {
        throw std::invalid_argument("metric " + std::string(metric_name(m)) + " is not related to maintainability");
    }
    return static_cast<std::size_t>(it - kColumns.begin());
}

RelationStrength RelationMatrix::at(Criterion row, Metric column) const {
    return cells_[static_cast<std::size_t>(row)][column_index(column)];
}

void RelationMatrix::set(Criterion row, Metric column, RelationStrength strength) {
    cells_[static_cast<std::size_t>(row)][column_index(column)] = strength;
}

CapTable CapTable::defaults() {
    return CapTable{{
        {Metric::LOC, 1000},
        {Metric::CLOC, 1000},
        {Metric::Statements, 500},
        {Metric::Methods, 50},
        {Metric::MCC_traditional, 50},
        {Metric::MCC_modified, 50},
        {Metric::CBO, 14},
        {Metric::DIT, 6},
        {Metric::NOC, 10},
        {Metric::LCOM, 50},
        {Metric::RFC, 50},
        {Metric::WMC, 50},
    }};
}

double CapTable::cap(Metric m) const {
    const auto it = caps.find(m);
    if (it == caps.end()) {
        throw ConfigError("no cap configured for " + std::string(metric_name(m)));
    }
    if (!(it->second > 0.0)) {
        throw ConfigError("cap for " + std::string(metric_name(m)) + " must be positive");
    }
    return it->second;
}

double normalize_metric(double value, double cap) {
    if (!(cap > 0.0)) {
        throw ConfigError("cap must be positive");
    }
    return std::min(std::max(value, 0.0), cap) / cap;
}

double criterion_score(const std::map<Metric, double>& normalized, Criterion row, const RelationMatrix& matrix,
                       const Weights& weights) {
    double weighted = 0.0;
    double total_weight = 0.0;
    for (auto m : RelationMatrix::kColumns) {
        const auto it = normalized.find(m);
        if (it == normalized.end()) {
            continue;
        }
        const double w = weights.of(matrix.at(row, m));
        weighted += w * it->second;
        total_weight += w;
    }
    if (!(total_weight > 0.0)) {
        throw AnalysisError("criterion unassessable: " + std::string(criterion_name(row)));
    }
    return std::clamp(1.0 - weighted / total_weight, 0.0, 1.0);
}

namespace {

std::map<Metric, double> normalized_values(const MetricVector& metrics, const CapTable& caps) {
    std::map<Metric, double> out;
    for (auto m : RelationMatrix::kColumns) {
        if (const auto v = metrics.get(m)) {
            out[m] = normalize_metric(*v, caps.cap(m));
        }
    }
    return out;
}

MaintainabilityReport report_from_normalized(std::map<Metric, double> normalized, const RelationMatrix& matrix,
                                             const CapTable& caps, const Weights& weights) {
    MaintainabilityReport report;
    for (auto c : kAllCriteria) {
        report.scores[static_cast<std::size_t>(c)] = criterion_score(normalized, c, matrix, weights);
    }
    report.overall = std::accumulate(report.scores.begin(), report.scores.end(), 0.0) /
                     static_cast<double>(report.scores.size());
    report.contributions = std::move(normalized);
    report.caps = caps;
    report.weights = weights;
    return report;
}

}  // namespace

double criterion_score(const MetricVector& metrics, Criterion row, const RelationMatrix& matrix,
                       const CapTable& caps, const Weights& weights) {
    return criterion_score(normalized_values(metrics, caps), row, matrix, weights);
}

MaintainabilityReport maintainability_report(const MetricVector& metrics, const RelationMatrix& matrix,
                                             const CapTable& caps, const Weights& weights) {
    return report_from_normalized(normalized_values(metrics, caps), matrix, caps, weights);
}

MaintainabilityReport package_maintainability(std::span<const MetricVector> file_vectors,
                                              std::span<const MetricVector> class_vectors,
                                              const RelationMatrix& matrix, const CapTable& caps,
                                              const Weights& weights) {
    const auto mean_normalized = [&](Metric m, std::span<const MetricVector> population) -> std::optional<double> {
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto& v : population) {
            if (const auto value = v.get(m)) {
                sum += normalize_metric(*value, caps.cap(m));
                ++n;
            }
        }
        return n == 0 ? std::nullopt : std::optional<double>(sum / static_cast<double>(n));
    };
    std::map<Metric, double> normalized;
    for (auto m : RelationMatrix::kColumns) {
        std::optional<double> value;
        if (file_granular(m)) {
            value = mean_normalized(m, file_vectors);
        } else if (m == Metric::Methods) {
            value = mean_normalized(m, class_vectors);
            if (!value) {
                value = mean_normalized(m, file_vectors);
            }
        } else {
            value = mean_normalized(m, class_vectors);
        }
        if (value) {
            normalized[m] = *value;
        }
    }
    return report_from_normalized(std::move(normalized), matrix, caps, weights);
}

}  // namespace codemetrics
