#include <doctest.h>

#include <random>

#include "codemetrics/token.hpp"

using namespace codemetrics;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
    std::vector<TokenKind> out;
    for (const auto& t : tokens) {
        out.push_back(t.kind);
    }
    return out;
}

}  // namespace

TEST_CASE("declaration with trailing line comment") {
    const auto tokens = tokenize("int x; // set");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].is_keyword("int"));
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[1].text == "x");
    CHECK(tokens[2].is_punct(";"));
    CHECK(tokens[3].kind == TokenKind::CommentSpan);
    CHECK(tokens[3].text == "// set");
    CHECK(tokens[3].column == 8);
}

TEST_CASE("block comment spans two lines") {
    const auto tokens = tokenize("/* a\nb */");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].kind == TokenKind::CommentSpan);
    CHECK(tokens[0].line == 1);
    CHECK(tokens[0].end_line == 2);
}

TEST_CASE("keywords inside string literals are not tokens") {
    const auto tokens = tokenize("s = \"if(x)\";");
    for (const auto& t : tokens) {
        CHECK_FALSE(t.is_keyword("if"));
    }
    CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::Identifier, TokenKind::Punctuator,
                                                  TokenKind::StringLiteral, TokenKind::Punctuator});
}

TEST_CASE("comment markers inside strings and chars stay opaque") {
    const auto tokens = tokenize("a = \"// no\"; b = '/'; c = \"/* no */\"; d;");
    for (const auto& t : tokens) {
        CHECK(t.kind != TokenKind::CommentSpan);
    }
    CHECK(tokens.back().text == ";");
}

TEST_CASE("escaped quotes do not end a literal") {
    const auto tokens = tokenize(R"(x = "a\"b // c"; y = '\''; z;)");
    REQUIRE(tokens.size() == 10);
    CHECK(tokens[2].text == R"("a\"b // c")");
    CHECK(tokens[6].text == R"('\'')");
}

TEST_CASE("raw string literal with delimiter") {
    const auto tokens = tokenize("auto r = R\"xy(a )\" // if\n)xy\";\nint z;");
    REQUIRE(tokens.size() >= 5);
    CHECK(tokens[3].kind == TokenKind::StringLiteral);
    CHECK(tokens[3].end_line == 2);
    CHECK(tokens[4].is_punct(";"));
    CHECK(tokens[5].is_keyword("int"));
    CHECK(tokens[5].line == 3);
}

TEST_CASE("preprocessor line with continuation is one token") {
    const auto tokens = tokenize("#define M(x) \\\n  if (x) {}\nint y;");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].kind == TokenKind::PreprocessorLine);
    CHECK(tokens[0].end_line == 2);
    CHECK(tokens[1].is_keyword("int"));
    CHECK(tokens[1].line == 3);
}

TEST_CASE("indented directive and a comment after it") {
    const auto tokens = tokenize("  #  include <a.h> // why\nx;");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].kind == TokenKind::PreprocessorLine);
    CHECK(tokens[0].column == 3);
    CHECK(tokens[1].kind == TokenKind::CommentSpan);
}

TEST_CASE("hash in the middle of a line is a punctuator") {
    const auto tokens = tokenize("a # b");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[1].is_punct("#"));
}

TEST_CASE("maximal munch punctuators") {
    const auto tokens = tokenize("a->b && c || d ? e :: f <<= g ... h");
    std::vector<std::string> punct;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::Punctuator) {
            punct.push_back(t.text);
        }
    }
    CHECK(punct == std::vector<std::string>{"->", "&&", "||", "?", "::", "<<=", "..."});
}

TEST_CASE("number literals with separators and exponents") {
    const auto tokens = tokenize("1'000'000 0x1Fu 1.5e-3 .5f");
    REQUIRE(tokens.size() == 4);
    for (const auto& t : tokens) {
        CHECK(t.kind == TokenKind::NumberLiteral);
    }
    CHECK(tokens[0].text == "1'000'000");
    CHECK(tokens[2].text == "1.5e-3");
}

TEST_CASE("unterminated block comment swallows the rest with a diagnostic") {
    Diagnostics diags;
    const auto tokens = tokenize("int a;\n/* open\nint b;\n", &diags);
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[3].kind == TokenKind::CommentSpan);
    CHECK(tokens[3].end_line == 3);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("unterminated") != std::string::npos);
}

TEST_CASE("unterminated string literal is diagnosed") {
    Diagnostics diags;
    const auto tokens = tokenize("s = \"abc\nint x;", &diags);
    CHECK_FALSE(diags.empty());
    CHECK(tokens.back().is_punct(";"));
}

TEST_CASE("line and column positions") {
    const auto tokens = tokenize("int\n  foo (\tbar);");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[1].line == 2);
    CHECK(tokens[1].column == 3);
    CHECK(tokens[3].column == 9);
}

TEST_CASE("invalid UTF-8 is replaced and reported") {
    std::size_t replaced = 0;
    const auto clean = sanitize_utf8("a\xff" "b\xc3\xa9", replaced);
    CHECK(replaced == 1);
    CHECK(clean == "a\xef\xbf\xbd" "b\xc3\xa9");
    Diagnostics diags;
    tokenize("// caf\xe9\n", &diags);
    CHECK(diags.size() == 1);
}

TEST_CASE("physical line count") {
    CHECK(count_physical_lines("") == 0);
    CHECK(count_physical_lines("a") == 1);
    CHECK(count_physical_lines("a\n") == 1);
    CHECK(count_physical_lines("a\n\n") == 2);
    CHECK(count_physical_lines("\n") == 1);
}

TEST_CASE("literal contents never yield keyword tokens") {
    std::mt19937 rng(7);
    const std::vector<std::string> words = {"if", "while", "for", "case", "switch", "&&", "||", "?", " ", "x", "\\\\"};
    for (int round = 0; round < 200; ++round) {
        std::string inner;
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        for (int i = 0; i < n; ++i) {
            inner += words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
            inner += ' ';
        }
        const auto text = "a = \"" + inner + "\"; /* " + inner + " */ // " + inner + "\nb;";
        const auto tokens = tokenize(text);
        REQUIRE(tokens.size() == 8);
        CHECK(tokens[2].kind == TokenKind::StringLiteral);
        CHECK(tokens[4].kind == TokenKind::CommentSpan);
        CHECK(tokens[5].kind == TokenKind::CommentSpan);
    }
}
