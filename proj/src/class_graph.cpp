#include <algorithm>
#include <functional>
#include <unordered_map>

#include "codemetrics/source_model.hpp"

namespace codemetrics {

bool ClassGraph::contains(std::string_view name) const {
    return classes.find(std::string(name)) != classes.end();
}

const ClassRecord& ClassGraph::at(std::string_view name) const {
    const auto it = classes.find(std::string(name));
    if (it == classes.end()) {
        throw std::out_of_range("unknown class '" + std::string(name) + "'");
    }
    return it->second;
}

std::vector<std::string> ClassGraph::bases_of(std::string_view name) const {
    std::vector<std::string> out;
    const std::string key(name);
    for (auto it = inheritance_edges.lower_bound({key, std::string()});
         it != inheritance_edges.end() && it->first == key; ++it) {
        out.push_back(it->second);
    }
    return out;
}

std::vector<std::string> ClassGraph::derived_of(std::string_view name) const {
    std::vector<std::string> out;
    for (const auto& [derived, base] : inheritance_edges) {
        if (base == name) {
            out.push_back(derived);
        }
    }
    return out;
}

namespace {

std::string_view last_component(std::string_view name) {
    const auto sep = name.rfind("::");
    return sep == std::string_view::npos ? name : name.substr(sep + 2);
}

std::string_view enclosing_scope(std::string_view name) {
    const auto sep = name.rfind("::");
    return sep == std::string_view::npos ? std::string_view{} : name.substr(0, sep);
}

// Approximate C++ name lookup over corpus class names: innermost enclosing
// scope first, then a unique suffix match.
class Resolver {
public:
    explicit Resolver(const std::map<std::string, ClassRecord>& classes) : classes_(classes) {
        for (const auto& [name, record] : classes) {
            by_simple_name_[std::string(last_component(name))].push_back(name);
        }
    }

    std::optional<std::string> resolve(std::string_view written, std::string_view context) const {
        if (written.starts_with("::")) {
            written.remove_prefix(2);
        }
        const auto bucket = by_simple_name_.find(std::string(last_component(written)));
        if (bucket == by_simple_name_.end()) {
            return std::nullopt;
        }
        auto scope = context;
        while (true) {
            std::string candidate = scope.empty() ? std::string(written) : std::string(scope) + "::" + std::string(written);
            if (classes_.contains(candidate)) {
                return candidate;
            }
            if (scope.empty()) {
                break;
            }
            scope = enclosing_scope(scope);
        }
        std::optional<std::string> unique;
        const std::string suffix = "::" + std::string(written);
        for (const auto& name : bucket->second) {
            if (name == written || name.ends_with(suffix)) {
                if (unique) {
                    return std::nullopt;
                }
                unique = name;
            }
        }
        return unique;
    }

private:
    const std::map<std::string, ClassRecord>& classes_;
    std::unordered_map<std::string, std::vector<std::string>> by_simple_name_;
};

bool method_order(const FunctionRecord& a, const FunctionRecord& b) {
    return std::tie(a.file, a.start_line, a.name) < std::tie(b.file, b.start_line, b.name);
}

void check_acyclic(const ClassGraph& graph) {
    enum class Mark { New, Active, Done };
    std::map<std::string, Mark> marks;
    std::vector<std::string> stack;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
        marks[name] = Mark::Active;
        stack.push_back(name);
        for (const auto& base : graph.bases_of(name)) {
            const auto mark = marks[base];
            if (mark == Mark::Active) {
                std::string cycle;
                const auto from = std::find(stack.begin(), stack.end(), base);
                for (auto it = from; it != stack.end(); ++it) {
                    cycle += *it + " -> ";
                }
                throw AnalysisError("inheritance cycle: " + cycle + base);
            }
            if (mark == Mark::New) {
                visit(base);
            }
        }
        stack.pop_back();
        marks[name] = Mark::Done;
    };
    for (const auto& [name, record] : graph.classes) {
        if (marks[name] == Mark::New) {
            visit(name);
        }
    }
}

ClassGraph merge(std::vector<const ClassRecord*> candidates, std::vector<const FunctionRecord*> out_of_line,
                 Diagnostics* diags) {
    // Canonical winner for duplicate names: smallest (file, line), so the
    // result does not depend on input order.
    std::sort(candidates.begin(), candidates.end(), [](const ClassRecord* a, const ClassRecord* b) {
        return std::tie(a->name, a->file, a->start_line) < std::tie(b->name, b->file, b->start_line);
    });
    ClassGraph graph;
    for (const auto* c : candidates) {
        const auto [it, inserted] = graph.classes.emplace(c->name, *c);
        if (!inserted) {
            if (diags != nullptr) {
                diags->push_back({Severity::Warning, c->file, c->start_line,
                                  "duplicate definition of class '" + c->name + "' ignored (kept " +
                                      it->second.file + ":" + std::to_string(it->second.start_line) + ")"});
            }
        }
    }

    const Resolver resolver(graph.classes);
    for (const auto* f : out_of_line) {
        if (const auto owner = resolver.resolve(*f->owner_class, f->scope)) {
            auto& record = graph.classes.at(*owner);
            record.methods.push_back(*f);
        }
    }
    for (auto& [name, record] : graph.classes) {
        std::sort(record.methods.begin(), record.methods.end(), method_order);
        record.refresh_method_sets();
    }

    for (const auto& [name, record] : graph.classes) {
        const auto scope = enclosing_scope(name);
        for (const auto& base : record.base_names) {
            const auto resolved = resolver.resolve(base, scope);
            if (!resolved || *resolved == name) {
                if (diags != nullptr) {
                    diags->push_back({Severity::Warning, record.file, record.start_line,
                                      "base '" + base + "' of class '" + name + "' is not in the corpus; ignored"});
                }
                continue;
            }
            graph.inheritance_edges.emplace(name, *resolved);
        }
    }
    check_acyclic(graph);

    for (const auto& [name, record] : graph.classes) {
        const auto couple = [&](const std::string& written, std::string_view context) {
            const auto other = resolver.resolve(written, context);
            if (other && *other != name) {
                graph.coupling_edges.insert(std::minmax(name, *other));
            }
        };
        const auto scope = enclosing_scope(name);
        for (const auto& base : record.base_names) {
            couple(base, scope);
        }
        for (const auto& type : record.referenced_type_names) {
            couple(type, name);
        }
        for (const auto& method : record.methods) {
            for (const auto& id : method.signature_identifiers) {
                couple(id, name);
            }
            for (const auto& id : method.body_identifiers) {
                couple(id, name);
            }
        }
    }
    return graph;
}

}  // namespace

ClassGraph build_class_graph(std::span<const SourceFileRecord> files, Diagnostics* diags) {
    std::vector<const ClassRecord*> candidates;
    std::vector<const FunctionRecord*> out_of_line;
    for (const auto& file : files) {
        for (const auto& c : file.classes) {
            candidates.push_back(&c);
        }
        for (const auto& f : file.functions) {
            if (!f.in_class_body && f.owner_class) {
                out_of_line.push_back(&f);
            }
        }
    }
    return merge(std::move(candidates), std::move(out_of_line), diags);
}

ClassGraph build_class_graph(std::span<const ClassRecord> classes, Diagnostics* diags) {
    std::vector<const ClassRecord*> candidates;
    for (const auto& c : classes) {
        candidates.push_back(&c);
    }
    return merge(std::move(candidates), {}, diags);
}

}  // namespace codemetrics
