#include "codemetrics/token.hpp"

#include <algorithm>
#include <array>

namespace codemetrics {

namespace {

constexpr std::array<std::string_view, 97> kKeywords = {
    "alignas",      "alignof",      "and",          "and_eq",       "asm",
    "auto",         "bitand",       "bitor",        "bool",         "break",
    "case",         "catch",        "char",         "char8_t",      "char16_t",
    "char32_t",     "class",        "compl",        "concept",      "const",
    "consteval",    "constexpr",    "constinit",    "const_cast",   "continue",
    "co_await",     "co_return",    "co_yield",     "decltype",     "default",
    "delete",       "do",           "double",       "dynamic_cast", "else",
    "enum",         "explicit",     "export",       "extern",       "false",
    "float",        "for",          "friend",       "goto",         "if",
    "inline",       "int",          "long",         "mutable",      "namespace",
    "new",          "noexcept",     "not",          "not_eq",       "nullptr",
    "operator",     "or",           "or_eq",        "private",      "protected",
    "public",       "register",     "reinterpret_cast", "requires", "return",
    "short",        "signed",       "sizeof",       "static",       "static_assert",
    "static_cast",  "struct",       "switch",       "template",     "this",
    "thread_local", "throw",        "true",         "try",          "typedef",
    "typeid",       "typename",     "union",        "unsigned",     "using",
    "virtual",      "void",         "volatile",     "wchar_t",      "while",
    "xor",          "xor_eq",       "restrict",     "_Bool",        "_Complex",
    "_Atomic",      "_Noreturn",
};

// Longest first so the first prefix match is the maximal munch.
constexpr std::array<std::string_view, 29> kMultiPunct = {
    "%:%:", "...", "<<=", ">>=", "->*", "<=>", "::", "->", "++", "--",
    "<<",   ">>",  "<=",  ">=",  "==",  "!=",  "&&", "||", "+=", "-=",
    "*=",   "/=",  "%=",  "&=",  "|=",  "^=",  ".*", "##", "%:",
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' ||
           static_cast<unsigned char>(c) >= 0x80;
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
    Lexer(std::string_view text, Diagnostics* diags) : text_(text), diags_(diags) {}

    std::vector<Token> run() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                advance();
                line_start_ = true;
                in_directive_ = false;
            } else if (is_space(c)) {
                advance();
            } else if (c == '\\' && next_is_newline(pos_ + 1)) {
                skip_splice();
            } else if (c == '/' && peek(1) == '/') {
                line_comment();
            } else if (c == '/' && peek(1) == '*') {
                block_comment();
            } else if (in_directive_ || (c == '#' && line_start_) ||
                       (c == '%' && peek(1) == ':' && line_start_)) {
                directive();
            } else if (c == '"') {
                quoted(TokenKind::StringLiteral, pos_, '"');
            } else if (c == '\'') {
                quoted(TokenKind::CharLiteral, pos_, '\'');
            } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
                number();
            } else if (is_ident_start(c)) {
                identifier_or_prefixed_literal();
            } else {
                punctuator();
            }
        }
        return std::move(tokens_);
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    // Backslash, optional '\r', then '\n'.
    bool next_is_newline(std::size_t at) const {
        if (at < text_.size() && text_[at] == '\r') {
            ++at;
        }
        return at < text_.size() && text_[at] == '\n';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void advance_to(std::size_t end) {
        while (pos_ < end) {
            advance();
        }
    }

    void skip_splice() {
        advance();  // backslash
        while (text_[pos_] != '\n') {
            advance();
        }
        advance();
    }

    void emit(TokenKind kind, std::size_t begin, std::uint32_t line, std::uint32_t column) {
        push(kind, begin, pos_, line, column);
        line_start_ = false;
    }

    void push(TokenKind kind, std::size_t begin, std::size_t end, std::uint32_t line,
              std::uint32_t column) {
        Token t;
        t.kind = kind;
        t.text = std::string(text_.substr(begin, end - begin));
        t.line = line;
        t.column = column;
        // A newline that ends the token belongs to the line it terminates.
        const auto newlines = std::count(t.text.begin(), t.text.end(), '\n') -
                              (!t.text.empty() && t.text.back() == '\n' ? 1 : 0);
        t.end_line = line + static_cast<std::uint32_t>(newlines);
        tokens_.push_back(std::move(t));
    }

    void diagnose(std::uint32_t line, std::string message) { warn(diags_, line, std::move(message)); }

    void line_comment() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            if (text_[pos_] == '\\' && next_is_newline(pos_ + 1)) {
                skip_splice();
                continue;
            }
            advance();
        }
        // '\r' of a CRLF ending is whitespace, not comment text.
        auto end = pos_;
        while (end > begin && text_[end - 1] == '\r') {
            --end;
        }
        push(TokenKind::CommentSpan, begin, end, line, column);
    }

    void block_comment() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        const auto close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
            advance_to(text_.size());
            diagnose(line, "unterminated block comment");
        } else {
            advance_to(close + 2);
        }
        // Comments are whitespace: a `#` after `/* x */` still opens a directive.
        push(TokenKind::CommentSpan, begin, pos_, line, column);
    }

    // A directive runs to the end of its logical line. A comment inside it
    // ends the current token; text after a block comment on the same
    // logical line resumes the directive.
    void directive() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        in_directive_ = true;
        auto last_non_space = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                break;
            }
            if (c == '\\' && next_is_newline(pos_ + 1)) {
                skip_splice();
                continue;
            }
            if (c == '/' && (peek(1) == '/' || peek(1) == '*')) {
                break;
            }
            if (c == '"' || c == '\'') {
                skip_quoted_in_directive(c);
                last_non_space = pos_;
                continue;
            }
            advance();
            if (!is_space(c)) {
                last_non_space = pos_;
            }
        }
        // Trailing whitespace is not part of the directive.
        push(TokenKind::PreprocessorLine, begin, last_non_space, line, column);
        line_start_ = false;
        in_directive_ = pos_ < text_.size() && text_[pos_] == '/' && peek(1) == '*';
    }

    void skip_quoted_in_directive(char quote) {
        advance();
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            const char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '\n') {
                advance();
                advance();
                continue;
            }
            advance();
            if (c == quote) {
                return;
            }
        }
    }

    // Ordinary string or char literal starting at `begin` (prefix included);
    // the opening quote is at pos_. Ends at the closing quote, or before an
    // unescaped newline.
    void quoted(TokenKind kind, std::size_t begin, char quote) {
        const auto line = line_;
        const auto column = column_ - static_cast<std::uint32_t>(pos_ - begin);
        advance();
        while (true) {
            if (pos_ >= text_.size()) {
                diagnose(line, kind == TokenKind::StringLiteral ? "unterminated string literal"
                                                                : "unterminated character literal");
                break;
            }
            const char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size()) {
                if (next_is_newline(pos_ + 1)) {
                    skip_splice();
                } else {
                    advance();
                    advance();
                }
                continue;
            }
            if (c == '\n') {
                diagnose(line, kind == TokenKind::StringLiteral ? "unterminated string literal"
                                                                : "unterminated character literal");
                break;
            }
            advance();
            if (c == quote) {
                break;
            }
        }
        emit(kind, begin, line, column);
    }

    // R"delim( ... )delim" starting at `begin`; pos_ is at the quote.
    void raw_string(std::size_t begin) {
        const auto line = line_;
        const auto column = column_ - static_cast<std::uint32_t>(pos_ - begin);
        const auto open = text_.find('(', pos_ + 1);
        const auto newline = text_.find('\n', pos_ + 1);
        if (open == std::string_view::npos || open - pos_ - 1 > 16 || newline < open) {
            quoted(TokenKind::StringLiteral, begin, '"');
            return;
        }
        const std::string terminator =
            ")" + std::string(text_.substr(pos_ + 1, open - pos_ - 1)) + "\"";
        const auto close = text_.find(terminator, open + 1);
        if (close == std::string_view::npos) {
            advance_to(text_.size());
            diagnose(line, "unterminated raw string literal");
        } else {
            advance_to(close + terminator.size());
        }
        emit(TokenKind::StringLiteral, begin, line, column);
    }

    void number() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        advance();
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if ((c == '+' || c == '-') &&
                (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E' || text_[pos_ - 1] == 'p' ||
                 text_[pos_ - 1] == 'P')) {
                advance();
            } else if (c == '\'' && is_ident_char(peek(1))) {
                advance();
            } else if (is_ident_char(c) || c == '.') {
                advance();
            } else {
                break;
            }
        }
        emit(TokenKind::NumberLiteral, begin, line, column);
    }

    void identifier_or_prefixed_literal() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            advance();
        }
        const auto word = text_.substr(begin, pos_ - begin);
        if (pos_ < text_.size()) {
            const char next = text_[pos_];
            const bool plain_prefix = word == "L" || word == "u" || word == "U" || word == "u8";
            const bool raw_prefix =
                word == "R" || word == "LR" || word == "uR" || word == "UR" || word == "u8R";
            if (next == '"' && raw_prefix) {
                raw_string(begin);
                return;
            }
            if (next == '"' && plain_prefix) {
                quoted(TokenKind::StringLiteral, begin, '"');
                return;
            }
            if (next == '\'' && plain_prefix) {
                quoted(TokenKind::CharLiteral, begin, '\'');
                return;
            }
        }
        emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, begin, line, column);
    }

    void punctuator() {
        const auto begin = pos_;
        const auto line = line_;
        const auto column = column_;
        const auto rest = text_.substr(pos_);
        std::size_t length = 1;
        for (auto p : kMultiPunct) {
            if (rest.starts_with(p)) {
                length = p.size();
                break;
            }
        }
        advance_to(pos_ + length);
        emit(TokenKind::Punctuator, begin, line, column);
    }

    std::string_view text_;
    Diagnostics* diags_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t column_ = 1;
    bool line_start_ = true;
    bool in_directive_ = false;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "Identifier";
        case TokenKind::Keyword: return "Keyword";
        case TokenKind::Punctuator: return "Punctuator";
        case TokenKind::StringLiteral: return "StringLiteral";
        case TokenKind::CharLiteral: return "CharLiteral";
        case TokenKind::NumberLiteral: return "NumberLiteral";
        case TokenKind::CommentSpan: return "CommentSpan";
        case TokenKind::PreprocessorLine: return "PreprocessorLine";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string sanitize_utf8(std::string_view text, std::size_t& replaced) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    replaced = 0;
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b = static_cast<unsigned char>(text[i]);
        std::size_t length = 0;
        std::uint32_t min_value = 0;
        if (b < 0x80) {
            out.push_back(text[i++]);
            continue;
        }
        if ((b & 0xE0) == 0xC0) {
            length = 2;
            min_value = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            length = 3;
            min_value = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            length = 4;
            min_value = 0x10000;
        }
        bool valid = length != 0 && i + length <= text.size();
        std::uint32_t value = length == 0 ? 0 : (b & (0x7F >> length));
        for (std::size_t k = 1; valid && k < length; ++k) {
            const auto cont = static_cast<unsigned char>(text[i + k]);
            valid = (cont & 0xC0) == 0x80;
            value = (value << 6) | (cont & 0x3F);
        }
        valid = valid && value >= min_value && value <= 0x10FFFF && !(value >= 0xD800 && value <= 0xDFFF);
        if (valid) {
            out.append(text.substr(i, length));
            i += length;
        } else {
            out.append(kReplacement);
            ++replaced;
            ++i;
        }
    }
    return out;
}

std::uint32_t count_physical_lines(std::string_view text) {
    if (text.empty()) {
        return 0;
    }
    const auto newlines = static_cast<std::uint32_t>(std::count(text.begin(), text.end(), '\n'));
    return text.back() == '\n' ? newlines : newlines + 1;
}

std::vector<Token> tokenize(std::string_view text, Diagnostics* diags) {
    std::size_t replaced = 0;
    const std::string clean = sanitize_utf8(text, replaced);
    if (replaced > 0) {
        warn(diags, 0, "replaced " + std::to_string(replaced) + " invalid UTF-8 byte(s)");
    }
    return Lexer(clean, diags).run();
}

}  // namespace codemetrics
