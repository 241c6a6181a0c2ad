#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "codemetrics/metric_vector.hpp"

namespace codemetrics {

enum class Criterion { Analyzability, Changeability, Stability, Testability };

inline constexpr std::array<Criterion, 4> kAllCriteria = {
    Criterion::Analyzability, Criterion::Changeability, Criterion::Stability, Criterion::Testability};

std::string_view criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

/// How strongly a metric is inversely related to a criterion ("i" / "I").
enum class RelationStrength { Inverse, StrongInverse };

/// Maintainability criteria x metrics. Every cell holds one strength.
class RelationMatrix {
public:
    /// The twelve related metrics, in column order.
    static constexpr std::array<Metric, 12> kColumns = {
        Metric::LOC,          Metric::CLOC, Metric::Statements, Metric::Methods,
        Metric::MCC_traditional, Metric::MCC_modified, Metric::CBO, Metric::DIT,
        Metric::NOC,          Metric::LCOM, Metric::RFC,        Metric::WMC,
    };

    /// Built-in relation table for the maintainability sub-characteristics.
    static RelationMatrix maintainability_default();

    RelationStrength at(Criterion row, Metric column) const;
    void set(Criterion row, Metric column, RelationStrength strength);

    bool operator==(const RelationMatrix&) const = default;

private:
    static std::size_t column_index(Metric m);
    std::array<std::array<RelationStrength, kColumns.size()>, kAllCriteria.size()> cells_{};
};

/// Per-metric saturation points; defaults are common alarm thresholds.
struct CapTable {
    std::map<Metric, double> caps;

    static CapTable defaults();
    /// Throws ConfigError when missing or not positive.
    double cap(Metric m) const;

    bool operator==(const CapTable&) const = default;
};

struct Weights {
    double strong_inverse = 2.0;
    double inverse = 1.0;

    double of(RelationStrength s) const { return s == RelationStrength::StrongInverse ? strong_inverse : inverse; }
    bool operator==(const Weights&) const = default;
};

struct MaintainabilityReport {
    std::array<double, 4> scores{};  // indexed by Criterion
    double overall = 0.0;
    /// Normalized [0, 1] value of every metric that entered the scores.
    std::map<Metric, double> contributions;
    CapTable caps;
    Weights weights;

    double score(Criterion c) const { return scores[static_cast<std::size_t>(c)]; }
    bool operator==(const MaintainabilityReport&) const = default;
};

/// min(value, cap) / cap. Throws ConfigError when cap <= 0.
double normalize_metric(double value, double cap);

/// 1 - sum(w * normalized) / sum(w) over the related metrics present in
/// `metrics`. Throws AnalysisError("criterion unassessable") when none are.
double criterion_score(const MetricVector& metrics, Criterion row, const RelationMatrix& matrix,
                       const CapTable& caps, const Weights& weights = {});

/// Same formula over already-normalized values.
double criterion_score(const std::map<Metric, double>& normalized, Criterion row,
                       const RelationMatrix& matrix, const Weights& weights = {});

MaintainabilityReport maintainability_report(const MetricVector& metrics, const RelationMatrix& matrix,
                                             const CapTable& caps, const Weights& weights = {});

/// Package-level report: each metric's normalized value is averaged over
/// the entities that carry it (size and complexity over files, OO over
/// classes, Methods over classes when there are any), then scored once.
MaintainabilityReport package_maintainability(std::span<const MetricVector> file_vectors,
                                              std::span<const MetricVector> class_vectors,
                                              const RelationMatrix& matrix, const CapTable& caps,
                                              const Weights& weights = {});

}  // namespace codemetrics
