#include <algorithm>
#include <array>
#include <deque>

#include "codemetrics/complexity.hpp"
#include "codemetrics/source_model.hpp"

namespace codemetrics {

void ClassRecord::refresh_method_sets() {
    attribute_uses_per_method.clear();
    callee_names_per_method.clear();
    for (const auto& m : methods) {
        method_names.insert(m.name);
        auto& uses = attribute_uses_per_method[m.name];
        for (const auto& id : m.body_identifiers) {
            if (attribute_names.contains(id)) {
                uses.insert(id);
            }
        }
        callee_names_per_method[m.name].insert(m.callees.begin(), m.callees.end());
    }
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string join(std::span<const std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            out += "::";
        }
        out += p;
    }
    return out;
}

std::vector<std::string> split_qualified(std::string_view name) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto sep = name.find("::", start);
        parts.emplace_back(name.substr(start, sep - start));
        if (sep == std::string_view::npos) {
            break;
        }
        start = sep + 2;
    }
    return parts;
}

bool one_of(const Token& t, std::initializer_list<std::string_view> words) {
    return std::find(words.begin(), words.end(), t.text) != words.end();
}

struct Declarator {
    std::string name;
    std::string qualifier;
    std::size_t name_index = 0;  // the identifier, or the `operator` keyword
    std::size_t lparen = 0;
    std::size_t rparen = 0;
};

struct Scope {
    std::vector<std::string> path;    // namespaces, then classes
    std::size_t namespace_depth = 0;  // leading entries of `path` that are namespaces
    std::optional<std::size_t> class_index;
};

class StructureScanner {
public:
    StructureScanner(std::span<const Token> tokens, std::vector<LineClass> lines, Diagnostics* diags)
        : lines_(std::move(lines)), diags_(diags) {
        for (const auto& t : tokens) {
            if (!t.is_trivia()) {
                t_.push_back(t);
            }
        }
    }

    void run() {
        std::size_t i = 0;
        const Scope global;
        while (i < t_.size()) {
            parse_scope(i, global);
            if (i < t_.size()) {
                warn(diags_, t_[i].line, "unmatched '}'");
                ++i;
            }
        }
        std::stable_sort(classes.begin(), classes.end(),
                         [](const ClassRecord& a, const ClassRecord& b) { return a.start_line < b.start_line; });
    }

    std::vector<FunctionRecord> functions;
    std::vector<ClassRecord> classes;

private:
    std::size_t size() const { return t_.size(); }

    // Matching closer for the bracket at `open`, or npos.
    std::size_t match(std::size_t open) const {
        const std::string_view opener = t_[open].text;
        const std::string_view closer = opener == "{" ? "}" : opener == "(" ? ")" : "]";
        int depth = 0;
        for (auto k = open; k < size(); ++k) {
            if (t_[k].is_punct(opener)) {
                ++depth;
            } else if (t_[k].is_punct(closer) && --depth == 0) {
                return k;
            }
        }
        return npos;
    }

    // Index just past the `>` closing the `<` at `open`. `>>` closes two
    // levels; parentheses hide comparisons. Returns open + 1 if unmatched.
    std::size_t skip_angles(std::size_t open) const {
        int depth = 0;
        for (auto k = open; k < size(); ++k) {
            const Token& tk = t_[k];
            if (tk.is_punct("(") || tk.is_punct("[")) {
                const auto close = match(k);
                if (close == npos) {
                    break;
                }
                k = close;
            } else if (tk.is_punct("<")) {
                ++depth;
            } else if (tk.is_punct(">")) {
                if (--depth == 0) {
                    return k + 1;
                }
            } else if (tk.is_punct(">>")) {
                depth -= 2;
                if (depth <= 0) {
                    return k + 1;
                }
            } else if (tk.is_punct(";") || tk.is_punct("{") || tk.is_punct("}")) {
                break;
            }
        }
        return open + 1;
    }

    // Index of the `<` opening the template argument list whose `>` is at `close`.
    std::size_t angle_open_before(std::size_t close, std::size_t floor) const {
        int depth = 0;
        for (auto k = close + 1; k-- > floor;) {
            if (t_[k].is_punct(">")) {
                ++depth;
            } else if (t_[k].is_punct(">>")) {
                depth += 2;
            } else if (t_[k].is_punct("<") && --depth <= 0) {
                return k;
            }
        }
        return npos;
    }

    // Qualifier written before the name starting at `start` ("A", "ns::A").
    std::string qualifier_before(std::size_t start, std::size_t floor) const {
        std::deque<std::string> parts;
        auto j = start;
        while (j >= floor + 2 && t_[j - 1].is_punct("::")) {
            auto q = j - 2;
            if (t_[q].is_punct(">")) {
                const auto open = angle_open_before(q, floor);
                if (open == npos || open == floor) {
                    break;
                }
                q = open - 1;
            }
            if (t_[q].kind != TokenKind::Identifier) {
                break;
            }
            parts.push_front(t_[q].text);
            j = q;
        }
        return join(std::vector<std::string>(parts.begin(), parts.end()));
    }

    static bool declarator_follow_ok(const Token& f) {
        switch (f.kind) {
            case TokenKind::Keyword:
                return one_of(f, {"const", "volatile", "noexcept", "throw", "try", "requires", "mutable",
                                  "constexpr"});
            case TokenKind::Identifier:
                return one_of(f, {"override", "final", "__attribute__"});
            case TokenKind::Punctuator:
                return one_of(f, {"->", ":", "&", "&&", "[", "=", ";", "{"});
            default:
                return false;
        }
    }

    // First function declarator in [from, to): a name followed by a
    // balanced parameter list. Parenthesized groups that look like macro
    // invocations (followed by a new type name) are skipped.
    std::optional<Declarator> find_declarator(std::size_t from, std::size_t to) const {
        for (auto k = from; k < to; ++k) {
            const Token& tk = t_[k];
            if (tk.is_punct("=")) {
                return std::nullopt;
            }
            if (tk.is_keyword("operator")) {
                return operator_declarator(k, from, to);
            }
            if (tk.is_punct("[")) {
                const auto close = match(k);
                if (close == npos || close >= to) {
                    return std::nullopt;
                }
                k = close;
                continue;
            }
            if (!tk.is_punct("(")) {
                continue;
            }
            const auto close = match(k);
            if (close == npos || close >= to) {
                return std::nullopt;
            }
            auto name_at = npos;
            if (k > from && t_[k - 1].kind == TokenKind::Identifier) {
                name_at = k - 1;
            } else if (k > from && t_[k - 1].is_punct(">")) {
                const auto open = angle_open_before(k - 1, from);
                if (open != npos && open > from && t_[open - 1].kind == TokenKind::Identifier) {
                    name_at = open - 1;
                }
            }
            const bool member_access =
                name_at != npos && name_at > from && (t_[name_at - 1].is_punct(".") || t_[name_at - 1].is_punct("->"));
            if (name_at != npos && !member_access &&
                !one_of(t_[name_at], {"__attribute__", "__declspec", "_Pragma"})) {
                const auto follow = close + 1;
                bool ok = follow >= to || declarator_follow_ok(t_[follow]);
                if (!ok && t_[follow].kind == TokenKind::Identifier) {
                    // `void f() OVERRIDE_MACRO {`: trailing macro specifiers, no further parameter list.
                    ok = std::none_of(t_.begin() + static_cast<std::ptrdiff_t>(follow),
                                      t_.begin() + static_cast<std::ptrdiff_t>(to),
                                      [](const Token& x) { return x.is_punct("("); });
                }
                if (ok) {
                    Declarator d;
                    auto start = name_at;
                    d.name = t_[name_at].text;
                    if (name_at > from && t_[name_at - 1].is_punct("~")) {
                        d.name = "~" + d.name;
                        start = name_at - 1;
                    }
                    d.qualifier = qualifier_before(start, from);
                    d.name_index = name_at;
                    d.lparen = k;
                    d.rparen = close;
                    return d;
                }
            }
            k = close;
        }
        return std::nullopt;
    }

    std::optional<Declarator> operator_declarator(std::size_t at, std::size_t from, std::size_t to) const {
        Declarator d;
        d.name = "operator";
        auto j = at + 1;
        if (j + 1 < to && t_[j].is_punct("(") && t_[j + 1].is_punct(")")) {
            d.name += "()";
            j += 2;
        } else {
            while (j < to && !t_[j].is_punct("(")) {
                const bool word = t_[j].kind == TokenKind::Identifier || t_[j].kind == TokenKind::Keyword;
                if (word) {
                    d.name += ' ';
                }
                d.name += t_[j].text;
                ++j;
            }
        }
        if (j >= to || !t_[j].is_punct("(")) {
            return std::nullopt;
        }
        const auto close = match(j);
        if (close == npos || close >= to) {
            return std::nullopt;
        }
        d.qualifier = qualifier_before(at, from);
        d.name_index = at;
        d.lparen = j;
        d.rparen = close;
        return d;
    }

    bool has_top_level(std::size_t from, std::size_t to, std::string_view punct) const {
        int depth = 0;
        for (auto k = from; k < to; ++k) {
            if (t_[k].is_punct("(") || t_[k].is_punct("[") || t_[k].is_punct("{")) {
                ++depth;
            } else if (t_[k].is_punct(")") || t_[k].is_punct("]") || t_[k].is_punct("}")) {
                --depth;
            } else if (depth == 0 && t_[k].is_punct(punct)) {
                return true;
            }
        }
        return false;
    }

    std::uint32_t code_lines(std::uint32_t first, std::uint32_t last) const {
        std::uint32_t n = 0;
        for (auto line = first; line <= last && line <= lines_.size(); ++line) {
            if (lines_[line - 1] == LineClass::Code) {
                ++n;
            }
        }
        return n;
    }

    static bool class_head_eligible(std::span<const Token> pending) {
        return std::all_of(pending.begin(), pending.end(), [](const Token& t) {
            return t.kind == TokenKind::Keyword &&
                   one_of(t, {"typedef", "friend", "export", "static", "inline", "constexpr", "const",
                              "volatile", "extern", "mutable"});
        });
    }

    std::span<const Token> pending(std::size_t decl, std::size_t i) const {
        return std::span<const Token>(t_).subspan(decl, i - decl);
    }

    void parse_scope(std::size_t& i, const Scope& scope) {
        std::size_t decl = i;
        while (i < size()) {
            const Token& tk = t_[i];
            if (tk.is_punct("}")) {
                finish_declaration(decl, i, scope);
                return;
            }
            if (tk.is_punct(";")) {
                finish_declaration(decl, i, scope);
                decl = ++i;
                continue;
            }
            if (tk.is_punct("{")) {
                handle_brace(decl, i, scope);
                continue;
            }
            if (tk.kind == TokenKind::Keyword) {
                if (tk.text == "namespace" && open_namespace(decl, i, scope)) {
                    continue;
                }
                if (tk.text == "extern" && i + 2 < size() && t_[i + 1].kind == TokenKind::StringLiteral &&
                    t_[i + 2].is_punct("{")) {
                    i += 3;
                    parse_scope(i, scope);
                    if (i < size()) {
                        ++i;
                    }
                    decl = i;
                    continue;
                }
                if (tk.text == "template" && i + 1 < size() && t_[i + 1].is_punct("<")) {
                    const bool header_first = decl == i;
                    i = skip_angles(i + 1);
                    if (header_first) {
                        decl = i;
                    }
                    continue;
                }
                if ((tk.text == "class" || tk.text == "struct" || tk.text == "union") &&
                    class_head_eligible(pending(decl, i)) && class_definition(decl, i, scope)) {
                    continue;
                }
                if (tk.text == "enum" && class_head_eligible(pending(decl, i)) && skip_enum_body(decl, i)) {
                    continue;
                }
                if (scope.class_index && one_of(tk, {"public", "protected", "private"})) {
                    auto j = i + 1;
                    while (j < size() && one_of(t_[j], {"slots", "Q_SLOTS"})) {
                        ++j;
                    }
                    if (j < size() && t_[j].is_punct(":")) {
                        i = j + 1;
                        decl = i;
                        continue;
                    }
                }
            } else if (scope.class_index && decl == i && one_of(tk, {"signals", "Q_SIGNALS"}) &&
                       i + 1 < size() && t_[i + 1].is_punct(":")) {
                i += 2;
                decl = i;
                continue;
            }
            ++i;
        }
        finish_declaration(decl, i, scope);
    }

    bool open_namespace(std::size_t& decl, std::size_t& i, const Scope& scope) {
        if (!std::all_of(t_.begin() + static_cast<std::ptrdiff_t>(decl), t_.begin() + static_cast<std::ptrdiff_t>(i),
                         [](const Token& t) { return t.is_keyword("inline"); })) {
            return false;
        }
        std::vector<std::string> names;
        auto j = i + 1;
        while (j < size() && !t_[j].is_punct("{") && !t_[j].is_punct(";") && !t_[j].is_punct("=")) {
            if (t_[j].kind == TokenKind::Identifier) {
                names.push_back(t_[j].text);
            }
            ++j;
        }
        if (j >= size() || !t_[j].is_punct("{")) {
            return false;
        }
        Scope inner = scope;
        inner.path.insert(inner.path.end(), names.begin(), names.end());
        inner.namespace_depth += names.size();
        i = j + 1;
        parse_scope(i, inner);
        if (i < size()) {
            ++i;
        } else {
            warn(diags_, t_[j].line, "unterminated namespace body");
        }
        decl = i;
        return true;
    }

    bool skip_enum_body(std::size_t& decl, std::size_t& i) {
        auto j = i + 1;
        while (j < size() && !t_[j].is_punct("{") && !t_[j].is_punct(";") && !t_[j].is_punct("(")) {
            ++j;
        }
        if (j >= size() || !t_[j].is_punct("{")) {
            return false;
        }
        const auto close = match(j);
        if (close == npos) {
            warn(diags_, t_[j].line, "unmatched '{' in enum");
            i = size();
        } else {
            i = close + 1;
        }
        decl = i;
        return true;
    }

    std::vector<std::string> parse_bases(std::size_t from, std::size_t to) const {
        std::vector<std::string> bases;
        std::string current;
        bool after_scope = false;
        for (auto k = from; k < to; ++k) {
            const Token& tk = t_[k];
            if (tk.is_punct("<")) {
                k = skip_angles(k) - 1;
            } else if (tk.is_punct("(")) {
                const auto close = match(k);
                k = close == npos ? to : close;
            } else if (tk.is_punct(",")) {
                if (!current.empty()) {
                    bases.push_back(current);
                }
                current.clear();
                after_scope = false;
            } else if (tk.is_punct("::")) {
                after_scope = true;
            } else if (tk.kind == TokenKind::Identifier) {
                current = after_scope && !current.empty() ? current + "::" + tk.text : tk.text;
                after_scope = false;
            }
        }
        if (!current.empty()) {
            bases.push_back(current);
        }
        return bases;
    }

    // `class` keyword at i. Returns false when this is not a definition
    // (forward declaration, elaborated type specifier).
    bool class_definition(std::size_t& decl, std::size_t& i, const Scope& scope) {
        const bool is_union = t_[i].text == "union";
        std::string name;
        bool after_scope = false;
        auto base_begin = npos;
        auto j = i + 1;
        for (; j < size(); ++j) {
            const Token& tk = t_[j];
            if (tk.is_punct("{")) {
                break;
            }
            if (base_begin != npos) {
                if (tk.is_punct(";") || tk.is_punct("}")) {
                    return false;
                }
                continue;
            }
            if (tk.is_punct("[") && j + 1 < size() && t_[j + 1].is_punct("[")) {
                const auto close = match(j);
                if (close == npos) {
                    return false;
                }
                j = close;
            } else if ((tk.is_keyword("alignas") || one_of(tk, {"__declspec", "__attribute__"})) &&
                       j + 1 < size() && t_[j + 1].is_punct("(")) {
                const auto close = match(j + 1);
                if (close == npos) {
                    return false;
                }
                j = close;
            } else if (tk.is_punct("<")) {
                j = skip_angles(j) - 1;
            } else if (tk.is_punct("::")) {
                after_scope = true;
            } else if (tk.is_punct(":")) {
                base_begin = j + 1;
            } else if (tk.kind == TokenKind::Identifier) {
                if (!one_of(tk, {"final", "sealed"})) {
                    name = after_scope && !name.empty() ? name + "::" + tk.text : tk.text;
                }
                after_scope = false;
            } else {
                return false;  // `;`, `*`, `(`, `=`, ... : not a definition
            }
        }
        if (j >= size()) {
            return false;
        }
        const auto body = j;
        const auto close = match(body);
        if (close == npos) {
            warn(diags_, t_[i].line, "unmatched '{' in class body");
            i = size();
            decl = i;
            return true;
        }
        if (name.empty() || is_union) {
            if (!is_union) {
                warn(diags_, t_[i].line, "anonymous class skipped");
            }
            i = close + 1;
            decl = i;
            return true;
        }

        ClassRecord record;
        auto qualified = scope.path;
        for (auto& part : split_qualified(name)) {
            qualified.push_back(std::move(part));
        }
        record.name = join(qualified);
        record.start_line = t_[i].line;
        record.end_line = t_[close].line;
        if (base_begin != npos) {
            record.base_names = parse_bases(base_begin, body);
        }
        const auto index = classes.size();
        classes.push_back(std::move(record));

        Scope inner;
        inner.path = std::move(qualified);
        inner.namespace_depth = scope.namespace_depth;
        inner.class_index = index;
        auto k = body + 1;
        parse_scope(k, inner);
        classes[index].refresh_method_sets();
        i = close + 1;
        decl = i;
        return true;
    }

    void handle_brace(std::size_t& decl, std::size_t& i, const Scope& scope) {
        if (const auto d = find_declarator(decl, i)) {
            const bool init_list = has_top_level(d->rparen + 1, i, ":");
            const bool member_init_brace =
                init_list && (t_[i - 1].kind == TokenKind::Identifier || t_[i - 1].is_punct(">"));
            if (!member_init_brace && !has_top_level(d->rparen + 1, i, "=")) {
                define_function(decl, i, *d, scope);
                return;
            }
        }
        const auto close = match(i);
        if (close == npos) {
            warn(diags_, t_[i].line, "unmatched '{'");
            i = size();
            return;
        }
        i = close + 1;
        if (i < size() && !t_[i].is_punct(";") && !t_[i].is_punct(",") && !t_[i].is_punct(")") &&
            !has_top_level(decl, i, "=") && !has_top_level(decl, i, ":")) {
            decl = i;
        }
    }

    void define_function(std::size_t& decl, std::size_t& i, const Declarator& d, const Scope& scope) {
        const auto brace = i;
        const auto close = match(brace);
        if (close == npos) {
            warn(diags_, t_[brace].line, "unmatched '{' in function '" + d.name + "'; candidate discarded");
            i = size();
            decl = i;
            return;
        }
        FunctionRecord f;
        f.name = d.name;
        if (scope.class_index) {
            f.owner_class = classes[*scope.class_index].name;
            f.in_class_body = true;
        } else if (!d.qualifier.empty()) {
            f.owner_class = d.qualifier;
        }
        f.scope = join(std::span<const std::string>(scope.path).first(scope.namespace_depth));
        f.start_line = t_[d.name_index].line;
        f.end_line = t_[close].line;
        f.loc = code_lines(f.start_line, f.end_line);
        const auto body = std::span<const Token>(t_).subspan(brace, close - brace + 1);
        f.mcc_traditional = mcc_traditional(body);
        f.mcc_modified = mcc_modified(body);
        // A constructor's member-initializer list reads like part of the body.
        auto init = d.rparen + 1;
        while (init < brace && !t_[init].is_punct(":")) {
            ++init;
        }
        for (auto k = init; k < brace; ++k) {
            if (t_[k].kind == TokenKind::Identifier) {
                f.body_identifiers.insert(t_[k].text);
            }
        }
        for (auto k = brace + 1; k < close; ++k) {
            if (t_[k].kind == TokenKind::Identifier) {
                f.body_identifiers.insert(t_[k].text);
                if (t_[k + 1].is_punct("(")) {
                    f.callees.insert(t_[k].text);
                }
            }
        }
        for (auto k = decl; k < init; ++k) {
            if (t_[k].kind == TokenKind::Identifier && k != d.name_index) {
                f.signature_identifiers.insert(t_[k].text);
            }
        }
        if (scope.class_index) {
            auto& owner = classes[*scope.class_index];
            owner.method_names.insert(f.name);
            owner.referenced_type_names.insert(f.signature_identifiers.begin(), f.signature_identifiers.end());
            owner.methods.push_back(f);
        }
        functions.push_back(std::move(f));
        i = close + 1;
        decl = i;
    }

    // A `;`-terminated declaration inside a class body: member function
    // declaration or data member(s). Namespace-scope declarations are ignored.
    void finish_declaration(std::size_t decl, std::size_t end, const Scope& scope) {
        if (!scope.class_index || decl >= end) {
            return;
        }
        auto& owner = classes[*scope.class_index];
        const Token& first = t_[decl];
        if (one_of(first, {"friend", "static_assert"})) {
            return;
        }
        if (one_of(first, {"typedef", "using"})) {
            for (auto k = decl + 1; k < end; ++k) {
                if (t_[k].kind == TokenKind::Identifier) {
                    owner.referenced_type_names.insert(t_[k].text);
                }
            }
            return;
        }
        if (const auto d = find_declarator(decl, end)) {
            owner.method_names.insert(d->name);
            for (auto k = decl; k < end; ++k) {
                if (t_[k].kind == TokenKind::Identifier && k != d->name_index) {
                    owner.referenced_type_names.insert(t_[k].text);
                }
            }
            return;
        }
        add_data_members(owner, decl, end);
    }

    void add_data_members(ClassRecord& owner, std::size_t decl, std::size_t end) {
        int parens = 0;
        int angles = 0;
        bool cut = false;
        std::optional<std::size_t> name_at;
        std::vector<std::size_t> identifiers;
        const auto flush = [&] {
            if (name_at) {
                owner.attribute_names.insert(t_[*name_at].text);
            }
            for (auto k : identifiers) {
                if (k != name_at) {
                    owner.referenced_type_names.insert(t_[k].text);
                }
            }
            name_at.reset();
            identifiers.clear();
            cut = false;
        };
        for (auto k = decl; k < end; ++k) {
            const Token& tk = t_[k];
            if (tk.is_punct("(") || tk.is_punct("[") || tk.is_punct("{")) {
                if (parens == 0 && angles == 0 && !tk.is_punct("(")) {
                    cut = true;
                }
                ++parens;
            } else if (tk.is_punct(")") || tk.is_punct("]") || tk.is_punct("}")) {
                --parens;
            } else if (parens == 0 && !cut && tk.is_punct("<")) {
                ++angles;
            } else if (parens == 0 && !cut && tk.is_punct(">")) {
                angles = std::max(0, angles - 1);
            } else if (parens == 0 && !cut && tk.is_punct(">>")) {
                angles = std::max(0, angles - 2);
            } else if (parens == 0 && angles == 0 && (tk.is_punct("=") || tk.is_punct(":"))) {
                cut = true;
            } else if (parens == 0 && angles == 0 && tk.is_punct(",")) {
                flush();
            } else if (tk.kind == TokenKind::Identifier && !cut) {
                identifiers.push_back(k);
                if (parens == 0 && angles == 0) {
                    name_at = k;
                }
            }
        }
        flush();
    }

    std::vector<Token> t_;
    std::vector<LineClass> lines_;
    Diagnostics* diags_;
};

std::uint32_t last_line(std::span<const Token> tokens) {
    std::uint32_t last = 0;
    for (const auto& t : tokens) {
        last = std::max(last, t.end_line);
    }
    return last;
}

StructureScanner scan(std::span<const Token> tokens, Diagnostics* diags) {
    StructureScanner scanner(tokens, classify_lines(tokens, last_line(tokens)), diags);
    scanner.run();
    return scanner;
}

}  // namespace

std::vector<FunctionRecord> extract_functions(std::span<const Token> tokens, Diagnostics* diags) {
    return scan(tokens, diags).functions;
}

std::vector<ClassRecord> extract_classes(std::span<const Token> tokens, Diagnostics* diags) {
    return scan(tokens, diags).classes;
}

SourceFileRecord analyze_source(std::string_view path, std::string_view text, Diagnostics* diags) {
    Diagnostics local;
    const auto tokens = tokenize(text, &local);
    SourceFileRecord record;
    record.path = std::string(path);
    record.total_lines = count_physical_lines(text);
    auto lines = classify_lines(tokens, record.total_lines);
    const auto counts = count_lines(lines);
    record.bloc = counts.blank;
    record.cloc_comment = counts.comment;
    record.loc = counts.code;
    record.statements = count_statements(tokens, &local);

    StructureScanner scanner(tokens, std::move(lines), &local);
    scanner.run();
    record.functions = std::move(scanner.functions);
    record.classes = std::move(scanner.classes);
    for (auto& f : record.functions) {
        f.file = record.path;
    }
    for (auto& c : record.classes) {
        c.file = record.path;
        for (auto& m : c.methods) {
            m.file = record.path;
        }
    }
    if (diags != nullptr) {
        for (auto& d : local) {
            d.file = record.path;
            diags->push_back(std::move(d));
        }
    }
    return record;
}

}  // namespace codemetrics
