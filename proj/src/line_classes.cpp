#include "codemetrics/source_model.hpp"

#include <algorithm>

namespace codemetrics {

std::vector<LineClass> classify_lines(std::span<const Token> tokens, std::uint32_t total_lines) {
    std::vector<LineClass> lines(total_lines, LineClass::Blank);
    for (const auto& t : tokens) {
        const auto mark = t.kind == TokenKind::CommentSpan ? LineClass::Comment : LineClass::Code;
        // Only lines where the token has visible text; a whitespace-only line
        // inside a comment or raw string stays Blank.
        auto line = t.line;
        bool visible = false;
        const auto flush = [&] {
            if (visible && line >= 1 && line <= total_lines) {
                auto& slot = lines[line - 1];
                if (mark == LineClass::Code || slot == LineClass::Blank) {
                    slot = mark;
                }
            }
        };
        for (char c : t.text) {
            if (c == '\n') {
                flush();
                ++line;
                visible = false;
            } else if (c != ' ' && c != '\t' && c != '\r' && c != '\f' && c != '\v') {
                visible = true;
            }
        }
        flush();
    }
    return lines;
}

LineCounts count_lines(std::span<const LineClass> lines) {
    LineCounts counts;
    for (auto c : lines) {
        switch (c) {
            case LineClass::Blank: ++counts.blank; break;
            case LineClass::Comment: ++counts.comment; break;
            case LineClass::Code: ++counts.code; break;
        }
    }
    return counts;
}

namespace {

// Index of the `)` matching the `(` at `open`, or tokens.size().
std::size_t matching_paren(const std::vector<const Token*>& tokens, std::size_t open) {
    int depth = 0;
    for (auto i = open; i < tokens.size(); ++i) {
        if (tokens[i]->is_punct("(")) {
            ++depth;
        } else if (tokens[i]->is_punct(")") && --depth == 0) {
            return i;
        }
    }
    return tokens.size();
}

}  // namespace

std::uint32_t count_statements(std::span<const Token> tokens, Diagnostics* diags) {
    std::vector<const Token*> code;
    code.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!t.is_trivia()) {
            code.push_back(&t);
        }
    }

    std::uint32_t count = 0;
    std::size_t for_header_end = 0;  // semicolons before this index belong to a for header
    long depth = 0;
    bool underflow = false;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Token& t = *code[i];
        if (t.is_punct(";")) {
            if (i >= for_header_end) {
                ++count;
            }
        } else if (t.is_punct("{")) {
            ++depth;
        } else if (t.is_punct("}")) {
            if (--depth < 0) {
                underflow = true;
                depth = 0;
            }
        } else if (t.kind == TokenKind::Keyword) {
            std::size_t next = i + 1;
            if (t.text == "if" || t.text == "for" || t.text == "while" || t.text == "switch") {
                if (t.text == "if" && next < code.size() && code[next]->is_keyword("constexpr")) {
                    ++next;
                }
                if (next >= code.size() || !code[next]->is_punct("(")) {
                    continue;
                }
                const auto close = matching_paren(code, next);
                if (t.text == "for") {
                    for_header_end = std::max(for_header_end, close);
                }
                if (close + 1 < code.size() && code[close + 1]->is_punct("{")) {
                    ++count;
                }
            } else if (t.text == "else" || t.text == "do") {
                if (next < code.size() && code[next]->is_punct("{")) {
                    ++count;
                }
            }
        }
    }
    if (underflow || depth != 0) {
        warn(diags, 0, "unbalanced braces");
    }
    return count;
}

}  // namespace codemetrics
