#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codemetrics/diagnostics.hpp"
#include "codemetrics/token.hpp"

namespace codemetrics {

enum class LineClass { Blank, Comment, Code };

struct LineCounts {
    std::uint32_t blank = 0;
    std::uint32_t comment = 0;
    std::uint32_t code = 0;

    std::uint32_t total() const { return blank + comment + code; }
    bool operator==(const LineCounts&) const = default;
};

/// Classifies every physical line 1..total_lines (index 0 is line 1).
/// Code beats Comment beats Blank; preprocessor lines are Code.
std::vector<LineClass> classify_lines(std::span<const Token> tokens, std::uint32_t total_lines);

LineCounts count_lines(std::span<const LineClass> lines);

/// `;` terminators outside `for` headers, plus one per `{`-bodied
/// if/else/for/while/do/switch. Unbalanced braces are diagnosed.
std::uint32_t count_statements(std::span<const Token> tokens, Diagnostics* diags = nullptr);

struct FunctionRecord {
    std::string name;
    /// In-class definitions: the enclosing class's qualified name.
    /// Out-of-line `A::f`: the qualifier as written ("A").
    std::optional<std::string> owner_class;
    /// Enclosing namespace path ("ns::inner"), used to resolve out-of-line owners.
    std::string scope;
    std::string file;
    std::uint32_t start_line = 0;
    std::uint32_t end_line = 0;
    std::uint32_t loc = 0;
    std::uint32_t mcc_traditional = 1;
    std::uint32_t mcc_modified = 1;
    bool in_class_body = false;
    std::set<std::string> body_identifiers;
    /// Identifiers immediately followed by `(` inside the body.
    std::set<std::string> callees;
    /// Return and parameter type names (every identifier of the declarator but the name).
    std::set<std::string> signature_identifiers;

    bool operator==(const FunctionRecord&) const = default;
};

struct ClassRecord {
    std::string name;  // qualified: namespaces and enclosing classes
    std::string file;
    std::uint32_t start_line = 0;
    std::uint32_t end_line = 0;
    std::vector<std::string> base_names;  // as written, template arguments stripped
    std::set<std::string> attribute_names;
    std::set<std::string> method_names;
    std::vector<FunctionRecord> methods;  // bodies found in the corpus
    std::map<std::string, std::set<std::string>> attribute_uses_per_method;
    std::map<std::string, std::set<std::string>> callee_names_per_method;
    std::set<std::string> referenced_type_names;

    /// Rebuilds the per-method attribute-use and callee maps from `methods`.
    void refresh_method_sets();

    bool operator==(const ClassRecord&) const = default;
};

struct SourceFileRecord {
    std::string path;
    std::uint32_t total_lines = 0;
    std::uint32_t bloc = 0;
    std::uint32_t cloc_comment = 0;
    std::uint32_t loc = 0;
    std::uint32_t statements = 0;
    std::vector<FunctionRecord> functions;  // every definition, in-class ones included
    std::vector<ClassRecord> classes;

    bool operator==(const SourceFileRecord&) const = default;
};

/// Function definitions with bodies, in source order.
std::vector<FunctionRecord> extract_functions(std::span<const Token> tokens,
                                              Diagnostics* diags = nullptr);

/// class/struct definitions with bodies; nested classes get `Outer::Inner` names.
std::vector<ClassRecord> extract_classes(std::span<const Token> tokens,
                                         Diagnostics* diags = nullptr);

/// Tokenizes and runs every per-file extraction. Diagnostics are tagged with `path`.
SourceFileRecord analyze_source(std::string_view path, std::string_view text,
                                Diagnostics* diags = nullptr);

struct ClassGraph {
    std::map<std::string, ClassRecord> classes;
    std::set<std::pair<std::string, std::string>> inheritance_edges;  // (derived, base)
    std::set<std::pair<std::string, std::string>> coupling_edges;     // first < second

    bool contains(std::string_view name) const;
    const ClassRecord& at(std::string_view name) const;  // throws std::out_of_range
    std::vector<std::string> bases_of(std::string_view name) const;
    std::vector<std::string> derived_of(std::string_view name) const;

    bool operator==(const ClassGraph&) const = default;
};

/// Merges classes across files, attaches out-of-line methods, resolves
/// bases and coupling references against corpus classes. Unresolved bases
/// are dropped with a diagnostic. Throws AnalysisError on an inheritance cycle.
ClassGraph build_class_graph(std::span<const SourceFileRecord> files, Diagnostics* diags = nullptr);

/// Convenience for class records that carry no out-of-line methods.
ClassGraph build_class_graph(std::span<const ClassRecord> classes, Diagnostics* diags = nullptr);

}  // namespace codemetrics
