#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codemetrics/diagnostics.hpp"

namespace codemetrics {

enum class TokenKind {
    Identifier,
    Keyword,
    Punctuator,
    StringLiteral,
    CharLiteral,
    NumberLiteral,
    CommentSpan,
    PreprocessorLine,
};

std::string_view to_string(TokenKind kind);

/// One lexeme. Positions are 1-based; columns count bytes.
/// `end_line` is the line holding the token's last character.
struct Token {
    TokenKind kind = TokenKind::Punctuator;
    std::string text;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    std::uint32_t end_line = 1;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(TokenKind::Punctuator, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
    /// Comments and preprocessor lines carry no program structure.
    bool is_trivia() const {
        return kind == TokenKind::CommentSpan || kind == TokenKind::PreprocessorLine;
    }

    bool operator==(const Token&) const = default;
};

bool is_keyword(std::string_view word);

/// Replaces every invalid UTF-8 sequence with U+FFFD. Returns the number
/// of replacements through `replaced`.
std::string sanitize_utf8(std::string_view text, std::size_t& replaced);

/// Physical line count: a trailing newline does not open a new line.
std::uint32_t count_physical_lines(std::string_view text);

/// Lexes C-family source without preprocessing. Comments and string/char
/// literals are opaque; a `#` directive (with `\` continuations) becomes a
/// single PreprocessorLine token. Unterminated block comments and raw
/// strings swallow the rest of the file and are reported to `diags`.
std::vector<Token> tokenize(std::string_view text, Diagnostics* diags = nullptr);

}  // namespace codemetrics
