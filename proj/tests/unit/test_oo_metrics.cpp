#include <doctest.h>

#include <random>

#include "codemetrics/oo_metrics.hpp"
#include "oracles.hpp"

using namespace codemetrics;

namespace {

ClassGraph graph_of(const std::vector<std::string>& texts) {
    std::vector<SourceFileRecord> files;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        files.push_back(analyze_source("f" + std::to_string(i) + ".cc", texts[i]));
    }
    return build_class_graph(files);
}

ClassRecord record_with(std::map<std::string, std::set<std::string>> uses,
                        std::map<std::string, std::set<std::string>> calls = {}) {
    ClassRecord r;
    r.name = "R";
    for (const auto& [m, attrs] : uses) {
        r.method_names.insert(m);
        r.attribute_names.insert(attrs.begin(), attrs.end());
    }
    r.attribute_uses_per_method = std::move(uses);
    r.callee_names_per_method = std::move(calls);
    return r;
}

}  // namespace

TEST_CASE("DIT") {
    const auto g = graph_of({"class A {}; class B : A {}; class C : B {};",
                             "class I {}; class L : I {}; class R : I {}; class D : L, R {};", "class Z {};"});
    CHECK(dit(g, "Z") == 0);
    CHECK(dit(g, "C") == 2);
    CHECK(dit(g, "D") == 2);
    CHECK_THROWS_AS(dit(g, "Q"), std::out_of_range);
}

TEST_CASE("DIT counts only corpus classes") {
    const auto g = graph_of({"class A : public std::exception {}; class B : public A {};"});
    CHECK(dit(g, "A") == 0);
    CHECK(dit(g, "B") == 1);
}

TEST_CASE("NOC") {
    const auto g = graph_of({"class A {}; class B : public A {}; class C : public A {}; class D : public B {};"});
    CHECK(noc(g, "A") == 2);
    CHECK(noc(g, "D") == 0);
    CHECK_THROWS_AS(noc(g, "Q"), std::out_of_range);
}

TEST_CASE("CBO") {
    const auto unrelated = graph_of({"class A {}; class B {};"});
    CHECK(cbo(unrelated, "A") == 0);
    CHECK(cbo(unrelated, "B") == 0);

    const auto inherit = graph_of({"class A {}; class B : public A {};"});
    CHECK(cbo(inherit, "A") == 1);
    CHECK(cbo(inherit, "B") == 1);

    const auto uses = graph_of({"class A {}; class B { public: void go(); };",
                                "class C { A held; void run() { B b; b.go(); } };"});
    CHECK(cbo(uses, "C") == 2);
    CHECK(cbo(uses, "A") == 1);
    CHECK_THROWS_AS(cbo(uses, "Q"), std::out_of_range);
}

TEST_CASE("LCOM") {
    CHECK(lcom(record_with({{"m1", {"a"}}})) == 0);
    CHECK(lcom(record_with({{"m1", {"a"}}, {"m2", {"a"}}})) == 0);
    CHECK(lcom(record_with({{"m1", {"a"}}, {"m2", {"a"}}, {"m3", {"b"}}})) == 1);
    CHECK(lcom(record_with({{"m1", {}}, {"m2", {}}, {"m3", {}}})) == 3);
}

TEST_CASE("LCOM from source") {
    const auto g = graph_of({"class K { int a; int b; void m1() { a++; } void m2() { a--; } void m3() { b = 0; } };"});
    CHECK(lcom(g.at("K")) == 1);
}

TEST_CASE("RFC") {
    CHECK(rfc(record_with({{"m1", {}}, {"m2", {}}})) == 2);
    CHECK(rfc(record_with({{"m1", {}}, {"m2", {}}}, {{"m1", {"foo", "bar"}}, {"m2", {"foo"}}})) == 4);
    CHECK(rfc(record_with({{"m1", {}}, {"m2", {}}}, {{"m1", {"m2"}}})) == 2);
}

TEST_CASE("WMC") {
    const auto g = graph_of({"class W {\n void a() {}\n void b() {}\n};",
                             "class V {\n void a() {}\n void b() { if (x && y) {} }\n"
                             " void c() { if (p) {} if (q) {} while (r) {} }\n void d();\n};"});
    CHECK(wmc(g.at("W")) == 2);
    CHECK(wmc(g.at("V")) == 8);
    CHECK(wmc(g.at("V"), WmcWeighting::Unit) == 4);
}

TEST_CASE("class_metrics is sorted and complete") {
    const auto g = graph_of({"class B : public A { void f() {} }; class A { int x; };"});
    const auto all = class_metrics(g);
    REQUIRE(all.size() == 2);
    CHECK(all[0].name == "A");
    CHECK(all[0].noc == 1);
    CHECK(all[1].dit == 1);
    CHECK(all[1].wmc == 1);
    const auto v = to_metric_vector(all[1]);
    CHECK(v.kind() == EntityKind::Class);
    CHECK(v.get(Metric::DIT) == 1.0);
    CHECK(v.get(Metric::Methods) == 1.0);
}

TEST_CASE("DIT and NOC match exhaustive path search on random graphs") {
    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto edges = oracle::random_dag(n, rng);
        const auto g = graph_of(oracle::dag_sources(n, edges, 3, rng));
        for (int c = 0; c < n; ++c) {
            const auto name = "C" + std::to_string(c);
            CHECK(dit(g, name) == static_cast<std::uint32_t>(oracle::longest_path_dit(c, edges)));
            CHECK(noc(g, name) == static_cast<std::uint32_t>(oracle::count_children(c, edges)));
        }
    }
}

TEST_CASE("LCOM and RFC match pair and set enumeration on random records") {
    std::mt19937 rng(9);
    for (int round = 0; round < 50; ++round) {
        const auto c = oracle::random_cohesion_case(rng);
        ClassRecord r = record_with(c.uses, c.calls);
        r.method_names.insert(c.declared_only.begin(), c.declared_only.end());
        CHECK(lcom(r) == oracle::lcom_by_pairs(c));
        CHECK(rfc(r) == oracle::rfc_by_union(c));
    }
}
