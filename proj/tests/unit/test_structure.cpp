#include <doctest.h>

#include <algorithm>

#include "codemetrics/source_model.hpp"

using namespace codemetrics;

namespace {

std::vector<FunctionRecord> functions_of(std::string_view text, Diagnostics* diags = nullptr) {
    const auto tokens = tokenize(text);
    return extract_functions(tokens, diags);
}

std::vector<ClassRecord> classes_of(std::string_view text, Diagnostics* diags = nullptr) {
    const auto tokens = tokenize(text);
    return extract_classes(tokens, diags);
}

const FunctionRecord* find_function(const std::vector<FunctionRecord>& fs, std::string_view name) {
    const auto it = std::find_if(fs.begin(), fs.end(), [&](const FunctionRecord& f) { return f.name == name; });
    return it == fs.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("free function definition") {
    const auto fs = functions_of("void f() {}");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].name == "f");
    CHECK_FALSE(fs[0].owner_class.has_value());
    CHECK(fs[0].mcc_traditional == 1);
}

TEST_CASE("out-of-line member definition") {
    const auto fs = functions_of("int A::g(int) const { return 0; }");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].name == "g");
    CHECK(fs[0].owner_class == "A");
}

TEST_CASE("declaration without body is not a function record") {
    CHECK(functions_of("void h();").empty());
    CHECK(functions_of("struct S { void h(); virtual int k() = 0; };").empty());
}

TEST_CASE("constructor with member initializer list") {
    const auto fs = functions_of("Box::Box(double x)\n  : Base(x), fX{x}, fY(2)\n{\n  if (x) {}\n}\n");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].name == "Box");
    CHECK(fs[0].owner_class == "Box");
    CHECK(fs[0].start_line == 1);
    CHECK(fs[0].end_line == 5);
    CHECK(fs[0].mcc_traditional == 2);
}

TEST_CASE("specifiers between parameter list and body") {
    const auto fs = functions_of(
        "struct T {\n"
        "  int a() const noexcept { return 1; }\n"
        "  int b() override final { return 2; }\n"
        "  auto c() -> int { return 3; }\n"
        "  int d() const & { return 4; }\n"
        "};\n");
    REQUIRE(fs.size() == 4);
    for (const auto& f : fs) {
        CHECK(f.owner_class == "T");
        CHECK(f.in_class_body);
    }
}

TEST_CASE("destructor and operator names") {
    const auto fs = functions_of("A::~A() {}\nbool A::operator==(const A& o) const { return true; }\n");
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].name == "~A");
    CHECK(fs[1].name == "operator==");
}

TEST_CASE("control statements and initializers are not functions") {
    const auto fs = functions_of(
        "void f() {\n  if (a) { }\n  while (b) { }\n  for (;;) { }\n  switch (c) { }\n}\n"
        "int arr[] = { 1, 2 };\nauto v = std::vector<int>{ 1 };\n");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].name == "f");
}

TEST_CASE("function record line span and code lines") {
    const auto text = "int f()\n{\n  // note\n\n  return 1;\n}\n";
    const auto record = analyze_source("f.cc", text);
    REQUIRE(record.functions.size() == 1);
    const auto& f = record.functions[0];
    CHECK(f.start_line == 1);
    CHECK(f.end_line == 6);
    CHECK(f.loc == 4);
    CHECK(f.file == "f.cc");
}

TEST_CASE("callees and body identifiers") {
    const auto fs = functions_of("void f() { int n = g(1) + h.k(2); if (n) {} }");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].callees == std::set<std::string>{"g", "k"});
    CHECK(fs[0].body_identifiers.count("h") == 1);
    CHECK(fs[0].callees.count("if") == 0);
}

TEST_CASE("namespaced functions carry their scope") {
    const auto fs = functions_of("namespace a { namespace b { void f() {} } }\nnamespace c::d { void g() {} }");
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].scope == "a::b");
    CHECK(fs[1].scope == "c::d");
}

TEST_CASE("unmatched braces discard the candidate") {
    Diagnostics diags;
    const auto fs = functions_of("void f() {\n  if (x) {\n", &diags);
    CHECK(fs.empty());
    CHECK_FALSE(diags.empty());
}

TEST_CASE("empty class") {
    const auto cs = classes_of("class A {};");
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].name == "A");
    CHECK(cs[0].base_names.empty());
    CHECK(cs[0].attribute_names.empty());
    CHECK(cs[0].method_names.empty());
}

TEST_CASE("class with base, attribute and method") {
    const auto cs = classes_of("class B : public A { int x; void m(){ x++; } };");
    REQUIRE(cs.size() == 1);
    const auto& b = cs[0];
    CHECK(b.name == "B");
    CHECK(b.base_names == std::vector<std::string>{"A"});
    CHECK(b.attribute_names == std::set<std::string>{"x"});
    CHECK(b.method_names == std::set<std::string>{"m"});
    REQUIRE(b.methods.size() == 1);
    CHECK(b.attribute_uses_per_method.at("m") == std::set<std::string>{"x"});
}

TEST_CASE("template arguments are stripped from bases") {
    const auto cs = classes_of("template<class T> class V {}; class C : V<int> {};");
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].name == "V");
    CHECK(cs[1].name == "C");
    CHECK(cs[1].base_names == std::vector<std::string>{"V"});
}

TEST_CASE("multiple and qualified bases") {
    const auto cs = classes_of("struct D : private ns::B<std::map<int, int>>, virtual public C {};");
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].base_names == std::vector<std::string>{"ns::B", "C"});
}

TEST_CASE("nested and namespaced class names") {
    const auto cs = classes_of("namespace n { class Outer { struct Inner { int v; }; Inner i; }; }");
    REQUIRE(cs.size() == 2);
    std::vector<std::string> names;
    for (const auto& c : cs) {
        names.push_back(c.name);
    }
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"n::Outer", "n::Outer::Inner"});
}

TEST_CASE("forward declarations and enums are not classes") {
    const auto cs = classes_of("class F; enum class E { a, b }; enum G { c }; struct S s;");
    CHECK(cs.empty());
}

TEST_CASE("data members and declared methods") {
    const auto cs = classes_of(
        "class K {\n"
        "public:\n"
        "  K();\n"
        "  virtual ~K();\n"
        "  int get() const { return a + b; }\n"
        "  static int count;\n"
        "  void set(int v);\n"
        "private:\n"
        "  int a = 0, b{1};\n"
        "  std::vector<Item*> items;\n"
        "  double (*fn)(double);\n"
        "};\n");
    REQUIRE(cs.size() == 1);
    const auto& k = cs[0];
    CHECK(k.method_names == std::set<std::string>{"K", "~K", "get", "set"});
    CHECK(k.attribute_names.count("a") == 1);
    CHECK(k.attribute_names.count("b") == 1);
    CHECK(k.attribute_names.count("items") == 1);
    CHECK(k.attribute_names.count("count") == 1);
    CHECK(k.attribute_uses_per_method.at("get") == std::set<std::string>{"a", "b"});
    CHECK(k.referenced_type_names.count("Item") == 1);
}

TEST_CASE("analyze_source fills every field and tags diagnostics") {
    Diagnostics diags;
    const auto r = analyze_source("dir/x.cc", "class A { void f() { } };\nint g() { return 1; }\n/* open", &diags);
    CHECK(r.path == "dir/x.cc");
    CHECK(r.total_lines == 3);
    CHECK(r.loc == 2);
    CHECK(r.cloc_comment == 1);
    CHECK(r.functions.size() == 2);
    CHECK(r.classes.size() == 1);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags[0].file == "dir/x.cc");
    CHECK(find_function(r.functions, "g") != nullptr);
}
