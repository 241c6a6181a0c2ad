#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codemetrics/metric_vector.hpp"
#include "codemetrics/source_model.hpp"

namespace codemetrics {

struct ClassMetrics {
    std::string name;
    std::uint32_t cbo = 0;
    std::uint32_t dit = 0;
    std::uint32_t lcom = 0;
    std::uint32_t noc = 0;
    std::uint32_t rfc = 0;
    std::uint32_t wmc = 0;
    std::uint32_t methods = 0;

    bool operator==(const ClassMetrics&) const = default;
};

enum class WmcWeighting {
    Complexity,  // traditional MCC per method body
    Unit,        // 1 per declared method name
};

// DIT, NOC and CBO throw std::out_of_range for a class not in the graph.

/// Longest base-edge path to a class without corpus-resolved bases (roots are 0).
std::uint32_t dit(const ClassGraph& graph, std::string_view cls);

/// Distinct immediate subclasses.
std::uint32_t noc(const ClassGraph& graph, std::string_view cls);

/// Undirected coupling degree.
std::uint32_t cbo(const ClassGraph& graph, std::string_view cls);

/// LCOM1 = max(0, P - Q) over unordered pairs of methods with bodies:
/// P pairs share no attribute, Q pairs share at least one.
std::uint32_t lcom(const ClassRecord& cls);

/// |method names ∪ names called from their bodies|, one level deep.
std::uint32_t rfc(const ClassRecord& cls);

std::uint32_t wmc(const ClassRecord& cls, WmcWeighting weighting = WmcWeighting::Complexity);

/// All six metrics for every class, sorted by name.
std::vector<ClassMetrics> class_metrics(const ClassGraph& graph,
                                        WmcWeighting weighting = WmcWeighting::Complexity);

MetricVector to_metric_vector(const ClassMetrics& m);

}  // namespace codemetrics
