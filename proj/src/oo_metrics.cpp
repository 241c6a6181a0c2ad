#include "codemetrics/oo_metrics.hpp"

#include <algorithm>
#include <map>

namespace codemetrics {

namespace {

void require_class(const ClassGraph& graph, std::string_view cls) {
    if (!graph.contains(cls)) {
        throw std::out_of_range("unknown class '" + std::string(cls) + "'");
    }
}

std::uint32_t depth(const ClassGraph& graph, const std::string& cls, std::map<std::string, std::uint32_t>& memo) {
    if (const auto it = memo.find(cls); it != memo.end()) {
        return it->second;
    }
    std::uint32_t longest = 0;
    for (const auto& base : graph.bases_of(cls)) {
        longest = std::max(longest, 1 + depth(graph, base, memo));
    }
    memo.emplace(cls, longest);
    return longest;
}

}  // namespace

std::uint32_t dit(const ClassGraph& graph, std::string_view cls) {
    require_class(graph, cls);
    std::map<std::string, std::uint32_t> memo;
    return depth(graph, std::string(cls), memo);
}

std::uint32_t noc(const ClassGraph& graph, std::string_view cls) {
    require_class(graph, cls);
    return static_cast<std::uint32_t>(graph.derived_of(cls).size());
}

std::uint32_t cbo(const ClassGraph& graph, std::string_view cls) {
    require_class(graph, cls);
    return static_cast<std::uint32_t>(std::count_if(
        graph.coupling_edges.begin(), graph.coupling_edges.end(),
        [&](const auto& edge) { return edge.first == cls || edge.second == cls; }));
}

std::uint32_t lcom(const ClassRecord& cls) {
    std::vector<const std::set<std::string>*> uses;
    for (const auto& [method, attributes] : cls.attribute_uses_per_method) {
        uses.push_back(&attributes);
    }
    long disjoint = 0;
    long sharing = 0;
    for (std::size_t a = 0; a < uses.size(); ++a) {
        for (std::size_t b = a + 1; b < uses.size(); ++b) {
            const bool share = std::any_of(uses[a]->begin(), uses[a]->end(),
                                           [&](const std::string& x) { return uses[b]->contains(x); });
            ++(share ? sharing : disjoint);
        }
    }
    return static_cast<std::uint32_t>(std::max(0L, disjoint - sharing));
}

std::uint32_t rfc(const ClassRecord& cls) {
    std::set<std::string> response = cls.method_names;
    for (const auto& [method, callees] : cls.callee_names_per_method) {
        response.insert(callees.begin(), callees.end());
    }
    return static_cast<std::uint32_t>(response.size());
}

std::uint32_t wmc(const ClassRecord& cls, WmcWeighting weighting) {
    if (weighting == WmcWeighting::Unit) {
        return static_cast<std::uint32_t>(cls.method_names.size());
    }
    std::uint32_t sum = 0;
    for (const auto& m : cls.methods) {
        sum += m.mcc_traditional;
    }
    return sum;
}

std::vector<ClassMetrics> class_metrics(const ClassGraph& graph, WmcWeighting weighting) {
    std::map<std::string, std::uint32_t> depth_memo;
    std::map<std::string, std::uint32_t> children;
    std::map<std::string, std::uint32_t> degree;
    for (const auto& [derived, base] : graph.inheritance_edges) {
        ++children[base];
    }
    for (const auto& [a, b] : graph.coupling_edges) {
        ++degree[a];
        ++degree[b];
    }
    std::vector<ClassMetrics> out;
    out.reserve(graph.classes.size());
    for (const auto& [name, record] : graph.classes) {
        ClassMetrics m;
        m.name = name;
        m.cbo = degree[name];
        m.dit = depth(graph, name, depth_memo);
        m.lcom = lcom(record);
        m.noc = children[name];
        m.rfc = rfc(record);
        m.wmc = wmc(record, weighting);
        m.methods = static_cast<std::uint32_t>(record.method_names.size());
        out.push_back(std::move(m));
    }
    return out;
}

MetricVector to_metric_vector(const ClassMetrics& m) {
    MetricVector v(EntityKind::Class);
    v.set(Metric::CBO, m.cbo)
        .set(Metric::DIT, m.dit)
        .set(Metric::LCOM, m.lcom)
        .set(Metric::NOC, m.noc)
        .set(Metric::RFC, m.rfc)
        .set(Metric::WMC, m.wmc)
        .set(Metric::Methods, m.methods);
    return v;
}

}  // namespace codemetrics
