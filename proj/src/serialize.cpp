#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "codemetrics/report.hpp"

namespace codemetrics {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "table") return Format::Table;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected json, csv or table)");
}

namespace {

// ---------------------------------------------------------------- json

ordered_json stats_to_json(const std::vector<AggregateStats>& block) {
    ordered_json out = ordered_json::object();
    for (const auto& s : block) {
        out[s.metric] = {{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"total", s.total}, {"count", s.count}};
    }
    return out;
}

ordered_json vector_to_json(const MetricVector& v) {
    ordered_json out = ordered_json::object();
    for (auto m : kAllMetrics) {
        if (const auto value = v.get(m)) {
            out[std::string(metric_name(m))] = *value;
        }
    }
    return out;
}

ordered_json maintainability_to_json(const MaintainabilityReport& r) {
    ordered_json scores = ordered_json::object();
    for (auto c : kAllCriteria) {
        scores[std::string(criterion_name(c))] = r.score(c);
    }
    ordered_json contributions = ordered_json::object();
    for (const auto& [m, v] : r.contributions) {
        contributions[std::string(metric_name(m))] = v;
    }
    ordered_json caps = ordered_json::object();
    for (const auto& [m, v] : r.caps.caps) {
        caps[std::string(metric_name(m))] = v;
    }
    return {{"scores", scores},
            {"overall", r.overall},
            {"contributions", contributions},
            {"caps", caps},
            {"weights", {{"strong_inverse", r.weights.strong_inverse}, {"inverse", r.weights.inverse}}}};
}

ordered_json report_to_json(const SnapshotReport& r) {
    ordered_json j;
    j["label"] = r.label;
    j["files"] = r.files;
    for (const auto& block : blocks(r)) {
        j[std::string(block.name)] = stats_to_json(*block.stats);
    }
    j["maintainability"] = maintainability_to_json(r.maintainability);
    j["config_fingerprint"] = r.config_fingerprint;
    j["tool_version"] = r.tool_version;
    j["diagnostic_count"] = r.diagnostic_count;
    if (r.per_file) {
        ordered_json rows = ordered_json::array();
        for (const auto& f : *r.per_file) {
            rows.push_back({{"path", f.path}, {"metrics", vector_to_json(f.metrics)}});
        }
        j["per_file"] = std::move(rows);
    }
    if (r.per_class) {
        ordered_json rows = ordered_json::array();
        for (const auto& c : *r.per_class) {
            rows.push_back({{"name", c.name},
                            {"CBO", c.cbo},
                            {"DIT", c.dit},
                            {"LCOM", c.lcom},
                            {"NOC", c.noc},
                            {"RFC", c.rfc},
                            {"WMC", c.wmc},
                            {"Methods", c.methods}});
        }
        j["per_class"] = std::move(rows);
    }
    if (r.per_function) {
        ordered_json rows = ordered_json::array();
        for (const auto& f : *r.per_function) {
            rows.push_back({{"file", f.file},
                            {"owner", f.owner},
                            {"name", f.name},
                            {"start_line", f.start_line},
                            {"end_line", f.end_line},
                            {"LOC", f.loc},
                            {"MCC_traditional", f.mcc_traditional},
                            {"MCC_modified", f.mcc_modified}});
        }
        j["per_function"] = std::move(rows);
    }
    return j;
}

Metric metric_key(const std::string& name) {
    const auto m = metric_from_name(name);
    if (!m) {
        throw ReportFormatError("unknown metric '" + name + "'");
    }
    return *m;
}

std::vector<AggregateStats> stats_from_json(const ordered_json& j) {
    std::vector<AggregateStats> out;
    for (const auto& [name, s] : j.items()) {
        metric_key(name);
        out.push_back({name, s.at("min").get<double>(), s.at("max").get<double>(), s.at("mean").get<double>(),
                       s.at("total").get<double>(), s.at("count").get<std::size_t>()});
    }
    return out;
}

MaintainabilityReport maintainability_from_json(const ordered_json& j) {
    MaintainabilityReport r;
    for (auto c : kAllCriteria) {
        r.scores[static_cast<std::size_t>(c)] = j.at("scores").at(std::string(criterion_name(c))).get<double>();
    }
    r.overall = j.at("overall").get<double>();
    for (const auto& [name, v] : j.at("contributions").items()) {
        r.contributions[metric_key(name)] = v.get<double>();
    }
    for (const auto& [name, v] : j.at("caps").items()) {
        r.caps.caps[metric_key(name)] = v.get<double>();
    }
    r.weights.strong_inverse = j.at("weights").at("strong_inverse").get<double>();
    r.weights.inverse = j.at("weights").at("inverse").get<double>();
    return r;
}

// ---------------------------------------------------------------- csv

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

void csv_row(std::ostream& os, std::string_view kind, std::string_view metric, std::string_view stat, double v) {
    os << csv_field(kind) << ',' << csv_field(metric) << ',' << stat << ',' << format_number(v) << '\n';
}

std::string report_to_csv(const SnapshotReport& r) {
    std::ostringstream os;
    os << "entity_kind,metric,statistic,value\n";
    csv_row(os, "snapshot", "Files", "total", static_cast<double>(r.files));
    for (const auto& block : blocks(r)) {
        for (const auto& s : *block.stats) {
            for (auto stat : kStatistics) {
                csv_row(os, block.entity_kind, s.metric, stat, statistic(s, stat));
            }
        }
    }
    for (auto c : kAllCriteria) {
        csv_row(os, "package", criterion_name(c), "score", r.maintainability.score(c));
    }
    csv_row(os, "package", "overall", "score", r.maintainability.overall);
    if (r.per_file) {
        for (const auto& f : *r.per_file) {
            for (auto m : kAllMetrics) {
                if (const auto v = f.metrics.get(m)) {
                    csv_row(os, "file:" + f.path, metric_name(m), "value", *v);
                }
            }
        }
    }
    if (r.per_class) {
        for (const auto& c : *r.per_class) {
            const auto v = to_metric_vector(c);
            for (auto m : kAllMetrics) {
                if (const auto value = v.get(m)) {
                    csv_row(os, "class:" + c.name, metric_name(m), "value", *value);
                }
            }
        }
    }
    if (r.per_function) {
        for (const auto& f : *r.per_function) {
            const auto id = "function:" + f.file + ":" + std::to_string(f.start_line) + ":" +
                            (f.owner.empty() ? f.name : f.owner + "::" + f.name);
            csv_row(os, id, "LOC", "value", f.loc);
            csv_row(os, id, "MCC_traditional", "value", f.mcc_traditional);
            csv_row(os, id, "MCC_modified", "value", f.mcc_modified);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- table

constexpr int kLabelWidth = 8;
constexpr int kColumnWidth = 16;

std::string cell(double v, bool always_decimals) {
    char buffer[64];
    if (always_decimals || v != std::floor(v)) {
        std::snprintf(buffer, sizeof buffer, "%.2f", v);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.0f", v);
    }
    return buffer;
}

std::string pad_left(std::string_view s, int width) {
    const auto n = static_cast<int>(s.size());
    return n >= width ? " " + std::string(s) : std::string(static_cast<std::size_t>(width - n), ' ') + std::string(s);
}

std::string pad_right(std::string_view s, int width) {
    const auto n = static_cast<int>(s.size());
    return n >= width ? std::string(s) : std::string(s) + std::string(static_cast<std::size_t>(width - n), ' ');
}

std::string column_title(std::string_view metric) {
    if (metric == "MCC_traditional") return "Traditional MCC";
    if (metric == "MCC_modified") return "Modified MCC";
    return std::string(metric);
}

// Metrics as columns, Min/Max/Mean/Total as rows.
void stats_table(std::ostream& os, std::string_view title, const std::vector<const AggregateStats*>& columns) {
    os << title << '\n';
    if (columns.empty()) {
        os << "  (no entities)\n\n";
        return;
    }
    os << pad_right("Values", kLabelWidth);
    for (const auto* s : columns) {
        os << pad_left(column_title(s->metric), kColumnWidth);
    }
    os << '\n';
    const std::array<std::pair<std::string_view, std::string_view>, 4> rows = {
        {{"Min", "min"}, {"Max", "max"}, {"Mean", "mean"}, {"Total", "total"}}};
    for (const auto& [label, stat] : rows) {
        os << pad_right(label, kLabelWidth);
        for (const auto* s : columns) {
            os << pad_left(cell(statistic(*s, stat), stat == "mean"), kColumnWidth);
        }
        os << '\n';
    }
    os << '\n';
}

std::vector<const AggregateStats*> all_of(const std::vector<AggregateStats>& block) {
    std::vector<const AggregateStats*> out;
    for (const auto& s : block) {
        out.push_back(&s);
    }
    return out;
}

std::string report_to_table(const SnapshotReport& r) {
    std::ostringstream os;
    os << "Release " << r.label << " (#Files = " << r.files << ")\n\n";

    std::vector<const AggregateStats*> per_file;
    for (const auto* block : {&r.size, &r.distribution, &r.complexity_per_file}) {
        for (const auto& s : *block) {
            per_file.push_back(&s);
        }
    }
    stats_table(os, "Program size, distribution and complexity (per file)", per_file);
    const auto functions = r.complexity_per_function.empty() ? 0 : r.complexity_per_function.front().count;
    stats_table(os, "Complexity (per function, " + std::to_string(functions) + " functions)",
                all_of(r.complexity_per_function));
    const auto classes = r.oo.empty() ? 0 : r.oo.front().count;
    stats_table(os, "Object orientation (per class, " + std::to_string(classes) + " classes)", all_of(r.oo));

    os << "Maintainability (1 = best)\n";
    char buffer[64];
    for (auto c : kAllCriteria) {
        std::snprintf(buffer, sizeof buffer, "%.3f", r.maintainability.score(c));
        os << "  " << pad_right(criterion_name(c), 16) << buffer << '\n';
    }
    std::snprintf(buffer, sizeof buffer, "%.3f", r.maintainability.overall);
    os << "  " << pad_right("Overall", 16) << buffer << '\n';

    if (r.per_file) {
        os << "\nFiles\n";
        for (const auto& f : *r.per_file) {
            os << "  " << f.path;
            for (auto m : kAllMetrics) {
                if (const auto v = f.metrics.get(m)) {
                    os << ' ' << metric_name(m) << '=' << format_number(*v);
                }
            }
            os << '\n';
        }
    }
    if (r.per_class) {
        os << "\nClasses\n";
        for (const auto& c : *r.per_class) {
            os << "  " << c.name << " CBO=" << c.cbo << " DIT=" << c.dit << " LCOM=" << c.lcom << " NOC=" << c.noc
               << " RFC=" << c.rfc << " WMC=" << c.wmc << " Methods=" << c.methods << '\n';
        }
    }
    if (r.per_function) {
        os << "\nFunctions\n";
        for (const auto& f : *r.per_function) {
            os << "  " << f.file << ':' << f.start_line << '-' << f.end_line << ' '
               << (f.owner.empty() ? f.name : f.owner + "::" + f.name) << " LOC=" << f.loc
               << " MCC_traditional=" << f.mcc_traditional << " MCC_modified=" << f.mcc_modified << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- deltas

std::string percent_text(const ReleaseDelta& d) {
    if (!d.percent) {
        return "n/a";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%+.2f%%", *d.percent);
    return buffer;
}

std::string deltas_to_json(std::span<const ReleaseDelta> deltas) {
    ordered_json rows = ordered_json::array();
    for (const auto& d : deltas) {
        ordered_json row = {{"block", d.block},   {"metric", d.metric}, {"statistic", d.statistic},
                            {"before", d.before}, {"after", d.after},   {"delta", d.delta}};
        row["percent"] = d.percent ? ordered_json(*d.percent) : ordered_json(nullptr);
        row["trend"] = trend_name(d.trend);
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

std::string deltas_to_csv(std::span<const ReleaseDelta> deltas) {
    std::ostringstream os;
    os << "block,metric,statistic,before,after,delta,percent,trend\n";
    for (const auto& d : deltas) {
        os << d.block << ',' << csv_field(d.metric) << ',' << d.statistic << ',' << format_number(d.before) << ','
           << format_number(d.after) << ',' << format_number(d.delta) << ','
           << (d.percent ? format_number(*d.percent) : std::string()) << ',' << trend_name(d.trend) << '\n';
    }
    return os.str();
}

std::string deltas_to_table(std::span<const ReleaseDelta> deltas) {
    std::ostringstream os;
    os << pad_right("Block", 26) << pad_right("Metric", 18) << pad_right("Statistic", 10) << pad_left("Before", 14)
       << pad_left("After", 14) << pad_left("Delta", 14) << pad_left("Percent", 10) << "  Trend\n";
    for (const auto& d : deltas) {
        const bool decimals = d.statistic == "mean" || d.statistic == "score";
        os << pad_right(d.block, 26) << pad_right(d.metric, 18) << pad_right(d.statistic, 10)
           << pad_left(cell(d.before, decimals), 14) << pad_left(cell(d.after, decimals), 14)
           << pad_left(cell(d.delta, decimals), 14) << pad_left(percent_text(d), 10) << "  " << trend_name(d.trend)
           << '\n';
    }
    return os.str();
}

}  // namespace

std::string serialize(const SnapshotReport& report, Format format) {
    switch (format) {
        case Format::Json: return report_to_json(report).dump(2) + "\n";
        case Format::Csv: return report_to_csv(report);
        case Format::Table: return report_to_table(report);
    }
    throw std::invalid_argument("unknown format");
}

std::string serialize(std::span<const ReleaseDelta> deltas, Format format) {
    switch (format) {
        case Format::Json: return deltas_to_json(deltas);
        case Format::Csv: return deltas_to_csv(deltas);
        case Format::Table: return deltas_to_table(deltas);
    }
    throw std::invalid_argument("unknown format");
}

SnapshotReport parse_report_json(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        SnapshotReport r;
        r.label = j.at("label").get<std::string>();
        r.files = j.at("files").get<std::size_t>();
        r.size = stats_from_json(j.at("size"));
        r.distribution = stats_from_json(j.at("distribution"));
        r.complexity_per_file = stats_from_json(j.at("complexity_per_file"));
        r.complexity_per_function = stats_from_json(j.at("complexity_per_function"));
        r.oo = stats_from_json(j.at("oo"));
        r.maintainability = maintainability_from_json(j.at("maintainability"));
        r.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        r.tool_version = j.at("tool_version").get<std::string>();
        r.diagnostic_count = j.value("diagnostic_count", std::size_t{0});
        if (j.contains("per_file")) {
            r.per_file.emplace();
            for (const auto& row : j.at("per_file")) {
                FileDetail f;
                f.path = row.at("path").get<std::string>();
                for (const auto& [name, v] : row.at("metrics").items()) {
                    f.metrics.set(metric_key(name), v.get<double>());
                }
                r.per_file->push_back(std::move(f));
            }
        }
        if (j.contains("per_class")) {
            r.per_class.emplace();
            for (const auto& row : j.at("per_class")) {
                r.per_class->push_back({row.at("name").get<std::string>(), row.at("CBO").get<std::uint32_t>(),
                                        row.at("DIT").get<std::uint32_t>(), row.at("LCOM").get<std::uint32_t>(),
                                        row.at("NOC").get<std::uint32_t>(), row.at("RFC").get<std::uint32_t>(),
                                        row.at("WMC").get<std::uint32_t>(), row.at("Methods").get<std::uint32_t>()});
            }
        }
        if (j.contains("per_function")) {
            r.per_function.emplace();
            for (const auto& row : j.at("per_function")) {
                r.per_function->push_back(
                    {row.at("file").get<std::string>(), row.at("owner").get<std::string>(),
                     row.at("name").get<std::string>(), row.at("start_line").get<std::uint32_t>(),
                     row.at("end_line").get<std::uint32_t>(), row.at("LOC").get<std::uint32_t>(),
                     row.at("MCC_traditional").get<std::uint32_t>(), row.at("MCC_modified").get<std::uint32_t>()});
            }
        }
        if (r.files == 0) {
            throw ReportFormatError("report has no files");
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ReportFormatError(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ReportFormatError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace codemetrics
