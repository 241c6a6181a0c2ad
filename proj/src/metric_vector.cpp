#include "codemetrics/metric_vector.hpp"

#include <stdexcept>
#include <string>

namespace codemetrics {

namespace {

constexpr std::array<std::string_view, kMetricCount> kNames = {
    "LOC", "BLOC", "CLOC", "Files", "Methods", "Statements", "MCC_traditional",
    "MCC_modified", "CBO", "DIT", "LCOM", "NOC", "RFC", "WMC",
};

}  // namespace

std::string_view metric_name(Metric m) { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Metric> metric_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return static_cast<Metric>(i);
        }
    }
    return std::nullopt;
}

bool is_oo_metric(Metric m) {
    switch (m) {
        case Metric::CBO:
        case Metric::DIT:
        case Metric::LCOM:
        case Metric::NOC:
        case Metric::RFC:
        case Metric::WMC:
            return true;
        default:
            return false;
    }
}

bool MetricVector::applicable(EntityKind kind, Metric m) {
    switch (kind) {
        case EntityKind::File:
        case EntityKind::Function:
            return !is_oo_metric(m) && m != Metric::Files;
        case EntityKind::Class:
            return m != Metric::Files;
        case EntityKind::Snapshot:
            return true;
    }
    return false;
}

MetricVector& MetricVector::set(Metric m, double value) {
    if (!applicable(kind_, m)) {
        throw std::invalid_argument("metric " + std::string(metric_name(m)) + " does not apply to this entity");
    }
    if (!(value >= 0.0)) {
        throw std::invalid_argument("metric " + std::string(metric_name(m)) + " must be non-negative");
    }
    if (kind_ == EntityKind::Function && (m == Metric::MCC_traditional || m == Metric::MCC_modified) &&
        value < 1.0) {
        throw std::invalid_argument("function MCC must be at least 1");
    }
    values_[index(m)] = value;
    return *this;
}

}  // namespace codemetrics
