#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace codemetrics {

/// The fourteen metrics. Order is the canonical column order everywhere.
enum class Metric : std::size_t {
    LOC,
    BLOC,
    CLOC,
    Files,
    Methods,
    Statements,
    MCC_traditional,
    MCC_modified,
    CBO,
    DIT,
    LCOM,
    NOC,
    RFC,
    WMC,
};

inline constexpr std::size_t kMetricCount = 14;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::LOC,   Metric::BLOC,  Metric::CLOC,           Metric::Files,        Metric::Methods,
    Metric::Statements, Metric::MCC_traditional, Metric::MCC_modified, Metric::CBO, Metric::DIT,
    Metric::LCOM,  Metric::NOC,   Metric::RFC,            Metric::WMC,
};

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);
bool is_oo_metric(Metric m);

enum class EntityKind { File, Function, Class, Snapshot };

/// Named non-negative values; absent entries mean "not applicable".
/// File and function vectors reject OO metrics and Files; class vectors
/// reject Files; function MCC values must be at least 1.
class MetricVector {
public:
    explicit MetricVector(EntityKind kind = EntityKind::Snapshot) : kind_(kind) {}

    EntityKind kind() const { return kind_; }

    /// Throws std::invalid_argument for a negative or non-applicable value.
    MetricVector& set(Metric m, double value);
    void erase(Metric m) { values_[index(m)].reset(); }

    std::optional<double> get(Metric m) const { return values_[index(m)]; }
    bool has(Metric m) const { return values_[index(m)].has_value(); }
    double value_or(Metric m, double fallback) const { return values_[index(m)].value_or(fallback); }

    static bool applicable(EntityKind kind, Metric m);

    bool operator==(const MetricVector&) const = default;

private:
    static constexpr std::size_t index(Metric m) { return static_cast<std::size_t>(m); }

    EntityKind kind_;
    std::array<std::optional<double>, kMetricCount> values_{};
};

}  // namespace codemetrics
