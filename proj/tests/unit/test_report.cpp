#include <doctest.h>

#include <algorithm>

#include "codemetrics/report.hpp"

using namespace codemetrics;

namespace {

ScanResult scan_of(const std::vector<std::pair<std::string, std::string>>& sources) {
    ScanResult scan;
    for (const auto& [path, text] : sources) {
        scan.files.push_back(analyze_source(path, text));
    }
    scan.graph = build_class_graph(scan.files);
    return scan;
}

const AggregateStats& stat_of(const std::vector<AggregateStats>& block, std::string_view metric) {
    const auto it = std::find_if(block.begin(), block.end(), [&](const AggregateStats& s) { return s.metric == metric; });
    REQUIRE(it != block.end());
    return *it;
}

const ReleaseDelta& delta_of(const std::vector<ReleaseDelta>& ds, std::string_view block, std::string_view metric,
                             std::string_view statistic) {
    const auto it = std::find_if(ds.begin(), ds.end(), [&](const ReleaseDelta& d) {
        return d.block == block && d.metric == metric && d.statistic == statistic;
    });
    REQUIRE(it != ds.end());
    return *it;
}

SnapshotReport report_with_loc_total(double total) {
    SnapshotReport r;
    r.files = 1;
    r.size = {AggregateStats{"LOC", 1, total, total, total, 1}};
    return r;
}

}  // namespace

TEST_CASE("aggregate statistics") {
    const std::vector<double> three = {1, 2, 3};
    const auto s = aggregate(three, "LOC");
    CHECK(s.min == 1);
    CHECK(s.max == 3);
    CHECK(s.mean == 2);
    CHECK(s.total == 6);
    CHECK(s.count == 3);
    const std::vector<double> one = {5};
    const auto t = aggregate(one, "LOC");
    CHECK(t.min == 5);
    CHECK(t.max == 5);
    CHECK(t.mean == 5);
    CHECK(t.total == 5);
    CHECK_THROWS_WITH_AS(aggregate({}, "LOC"), doctest::Contains("no entities for metric"), AnalysisError);
}

TEST_CASE("two-file report") {
    const auto scan = scan_of({{"a.cc", "// header\nint f(int x)\n{\n  if (x) { return 1; }\n\n  return 0;\n}\n"},
                               {"b.cc", "class K { int v; int get() { return v; } };\n"}});
    ReportOptions options;
    options.label = "two";
    const auto r = build_snapshot_report(scan, options);
    CHECK(r.label == "two");
    CHECK(r.files == 2);
    // a.cc: 5 code, 1 blank, 1 comment; b.cc: 1 code.
    CHECK(stat_of(r.size, "LOC").total == 6);
    CHECK(stat_of(r.size, "LOC").min == 1);
    CHECK(stat_of(r.size, "LOC").max == 5);
    CHECK(stat_of(r.size, "LOC").mean == 3);
    CHECK(stat_of(r.size, "BLOC").total == 1);
    CHECK(stat_of(r.size, "CLOC").total == 1);
    // a.cc: if-construct and two returns; b.cc: member, return and the class terminator.
    CHECK(stat_of(r.distribution, "Statements").total == 6);
    CHECK(stat_of(r.distribution, "Methods").total == 2);
    CHECK(stat_of(r.complexity_per_file, "MCC_traditional").max == 2);
    CHECK(stat_of(r.complexity_per_function, "MCC_traditional").count == 2);
    CHECK(stat_of(r.complexity_per_function, "MCC_traditional").mean == 1.5);
    CHECK(stat_of(r.oo, "WMC").total == 1);
    CHECK(stat_of(r.oo, "LCOM").total == 0);
    CHECK(r.tool_version == tool_version());
    CHECK_FALSE(r.per_file.has_value());
    CHECK(r.maintainability.overall > 0.9);
}

TEST_CASE("detail blocks on request") {
    const auto scan = scan_of({{"a.cc", "void f() {}\n"}, {"b.cc", "struct S { void g() {} };\n"}});
    ReportOptions options;
    options.per_file = options.per_class = options.per_function = true;
    const auto r = build_snapshot_report(scan, options);
    REQUIRE(r.per_file.has_value());
    CHECK(r.per_file->size() == 2);
    CHECK(r.per_class->size() == 1);
    CHECK(r.per_function->size() == 2);
    CHECK(r.per_function->at(1).owner == "S");
}

TEST_CASE("corpus without classes or functions has empty blocks") {
    const auto r = build_snapshot_report(scan_of({{"a.hh", "int x;\n"}}), {});
    CHECK(r.oo.empty());
    CHECK(r.complexity_per_function.empty());
    CHECK(r.files == 1);
}

TEST_CASE("empty corpus") {
    CHECK_THROWS_AS(build_snapshot_report(ScanResult{}, {}), AnalysisError);
}

TEST_CASE("LOC total drop between releases") {
    const auto ds = compare_snapshots(report_with_loc_total(558485), report_with_loc_total(465260));
    const auto& d = delta_of(ds, "size", "LOC", "total");
    CHECK(d.delta == -93225);
    CHECK(d.trend == Trend::Decreasing);
    REQUIRE(d.percent.has_value());
    CHECK(*d.percent == doctest::Approx(-16.6925).epsilon(1e-4));
}

TEST_CASE("identical reports are flat") {
    const auto r = build_snapshot_report(scan_of({{"a.cc", "int f() { return 1; }\n"}}), {});
    for (const auto& d : compare_snapshots(r, r)) {
        CHECK(d.delta == 0);
        CHECK(d.trend == Trend::Flat);
    }
}

TEST_CASE("a function gaining an if increases MCC by one") {
    const auto before = build_snapshot_report(scan_of({{"a.cc", "int f(int x) {\n  return x;\n}\n"}}), {});
    const auto after =
        build_snapshot_report(scan_of({{"a.cc", "int f(int x) {\n  if (x) x = 0;\n  return x;\n}\n"}}), {});
    const auto ds = compare_snapshots(before, after);
    for (const auto* metric : {"MCC_traditional", "MCC_modified"}) {
        const auto& per_file = delta_of(ds, "complexity_per_file", metric, "total");
        CHECK(per_file.delta == 1);
        CHECK(per_file.trend == Trend::Increasing);
        CHECK(delta_of(ds, "complexity_per_function", metric, "max").delta == 1);
    }
}

TEST_CASE("comparison is antisymmetric") {
    const auto a = build_snapshot_report(scan_of({{"a.cc", "int f(int x) { return x ? 1 : 2; }\n"}}), {});
    const auto b = build_snapshot_report(
        scan_of({{"a.cc", "int f(int x) { return x; }\n"}, {"b.cc", "// c\nclass K {};\n"}}), {});
    const auto ab = compare_snapshots(a, b);
    const auto ba = compare_snapshots(b, a);
    REQUIRE(ab.size() == ba.size());
    for (std::size_t i = 0; i < ab.size(); ++i) {
        CHECK(ab[i].delta == -ba[i].delta);
        CHECK(ab[i].before == ba[i].after);
    }
}

TEST_CASE("percent is absent when growing from zero") {
    auto a = report_with_loc_total(0);
    auto b = report_with_loc_total(10);
    const auto& d = delta_of(compare_snapshots(a, b), "size", "LOC", "total");
    CHECK_FALSE(d.percent.has_value());
    CHECK(d.trend == Trend::Increasing);
    const auto& flat = delta_of(compare_snapshots(a, a), "size", "LOC", "total");
    CHECK(flat.percent == 0.0);
}

TEST_CASE("disjoint reports cannot be compared") {
    SnapshotReport a;
    a.files = 1;
    a.size = {AggregateStats{"LOC", 1, 1, 1, 1, 1}};
    SnapshotReport b;
    b.files = 1;
    b.oo = {AggregateStats{"CBO", 1, 1, 1, 1, 1}};
    CHECK_THROWS_AS(compare_snapshots(a, b), AnalysisError);
}

TEST_CASE("fingerprint mismatch is a warning") {
    auto a = report_with_loc_total(5);
    auto b = report_with_loc_total(5);
    a.config_fingerprint = "aaaa";
    b.config_fingerprint = "bbbb";
    Diagnostics diags;
    compare_snapshots(a, b, &diags);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::Warning);
}
