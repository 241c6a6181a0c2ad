#include "codemetrics/size_metrics.hpp"

#include "codemetrics/complexity.hpp"

namespace codemetrics {

MetricVector file_size_metrics(const SourceFileRecord& record) {
    const auto mcc = file_mcc(record.functions);
    MetricVector v(EntityKind::File);
    v.set(Metric::LOC, record.loc)
        .set(Metric::BLOC, record.bloc)
        .set(Metric::CLOC, record.cloc_comment)
        .set(Metric::Statements, record.statements)
        .set(Metric::Methods, static_cast<double>(record.functions.size()))
        .set(Metric::MCC_traditional, static_cast<double>(mcc.traditional))
        .set(Metric::MCC_modified, static_cast<double>(mcc.modified));
    return v;
}

MetricVector snapshot_distribution(std::span<const SourceFileRecord> records) {
    if (records.empty()) {
        throw AnalysisError("empty corpus");
    }
    constexpr std::array summed = {Metric::LOC,        Metric::BLOC,           Metric::CLOC,
                                   Metric::Statements, Metric::Methods,        Metric::MCC_traditional,
                                   Metric::MCC_modified};
    std::array<double, summed.size()> totals{};
    for (const auto& r : records) {
        const auto file = file_size_metrics(r);
        for (std::size_t i = 0; i < summed.size(); ++i) {
            totals[i] += file.value_or(summed[i], 0.0);
        }
    }
    MetricVector v(EntityKind::Snapshot);
    v.set(Metric::Files, static_cast<double>(records.size()));
    for (std::size_t i = 0; i < summed.size(); ++i) {
        v.set(summed[i], totals[i]);
    }
    return v;
}

}  // namespace codemetrics
