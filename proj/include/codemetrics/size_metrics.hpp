#pragma once

#include <span>

#include "codemetrics/metric_vector.hpp"
#include "codemetrics/source_model.hpp"

namespace codemetrics {

/// LOC, BLOC, CLOC, Statements, Methods (function bodies in the file) and
/// the per-file MCC sums.
MetricVector file_size_metrics(const SourceFileRecord& record);

/// Files plus sums of the per-file size and distribution values.
/// Throws AnalysisError("empty corpus") for no files.
MetricVector snapshot_distribution(std::span<const SourceFileRecord> records);

}  // namespace codemetrics
