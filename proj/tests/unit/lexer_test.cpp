#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sqry/source.hpp"

namespace sqry::source {
namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
    std::vector<TokenKind> out;
    for (const auto& t : tokens) out.push_back(t.kind);
    return out;
}

std::string error_kind(std::string_view src) {
    try {
        tokenize(src);
    } catch (const SyntaxError& e) {
        return e.kind();
    }
    return "none";
}

TEST(Lexer, PrintExitLine) {
    auto tokens = tokenize("print \"No error\" exit");
    EXPECT_EQ(kinds(tokens),
              (std::vector{TokenKind::KwPrint, TokenKind::String, TokenKind::KwExit, TokenKind::Newline}));
    EXPECT_EQ(tokens[1].text, "No error");
}

TEST(Lexer, EmptyInput) {
    EXPECT_TRUE(tokenize("").empty());
    EXPECT_TRUE(tokenize("\n   \n\t\n").empty());
}

TEST(Lexer, DemoSourceHasOneStringPerLiteral) {
    auto tokens = tokenize(testing::read_fixture("fixtures/led_demo.qrt"));
    auto strings = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::String; });
    // 46 quote characters in the source
    EXPECT_EQ(strings, 23);
}

TEST(Lexer, IndentAndDedentBalance) {
    auto tokens = tokenize(testing::read_fixture("fixtures/led_demo.qrt"));
    auto indents = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::Indent; });
    auto dedents = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::Dedent; });
    EXPECT_EQ(indents, 10);  // one per if body
    EXPECT_EQ(indents, dedents);
}

TEST(Lexer, IndentationLevels) {
    auto tokens = tokenize("if \"a\":\n  print \"x\"\n  if \"b\":\n      exit\nexit\n");
    EXPECT_EQ(kinds(tokens),
              (std::vector{TokenKind::KwIf, TokenKind::String, TokenKind::Colon, TokenKind::Newline,
                           TokenKind::Indent, TokenKind::KwPrint, TokenKind::String, TokenKind::Newline,
                           TokenKind::KwIf, TokenKind::String, TokenKind::Colon, TokenKind::Newline,
                           TokenKind::Indent, TokenKind::KwExit, TokenKind::Newline, TokenKind::Dedent,
                           TokenKind::Dedent, TokenKind::KwExit, TokenKind::Newline}));
}

TEST(Lexer, TabsCountAsFourSpaces) {
    auto spaces = tokenize("if \"a\":\n    exit\n");
    auto tabs = tokenize("if \"a\":\n\texit\n");
    EXPECT_EQ(kinds(spaces), kinds(tabs));
    // a tab and four spaces are the same level
    EXPECT_NO_THROW(tokenize("if \"a\":\n\tprint \"x\"\n    exit\n"));
}

TEST(Lexer, CrlfAndBom) {
    auto lf = tokenize("input \"q\"\nif \"a\":\n    exit\n");
    auto crlf = tokenize("\xEF\xBB\xBFinput \"q\"\r\nif \"a\":\r\n    exit\r\n");
    EXPECT_EQ(lf, crlf);
}

TEST(Lexer, Escapes) {
    auto tokens = tokenize(R"(print "say \"hi\" \\ ok")");
    EXPECT_EQ(tokens[1].text, "say \"hi\" \\ ok");
    EXPECT_EQ(error_kind(R"(print "bad \n")"), "InvalidEscape");
}

TEST(Lexer, UnicodeStringsPassThrough) {
    auto tokens = tokenize("print \"Ω → 日本\"");
    EXPECT_EQ(tokens[1].text, "Ω → 日本");
}

TEST(Lexer, Errors) {
    EXPECT_EQ(error_kind("print \"unterminated\n\"\n"), "UnterminatedString");
    EXPECT_EQ(error_kind("print \"Normally operating with\n    USB drive connected\"\n"), "UnterminatedString");
    EXPECT_EQ(error_kind("if \"a\":\n    exit\n  exit\n"), "InconsistentIndentation");
    EXPECT_EQ(error_kind("goto 3\n"), "UnexpectedCharacter");
    EXPECT_EQ(error_kind("print 'x'\n"), "UnexpectedCharacter");
}

TEST(Lexer, ErrorsCarryLineNumbers) {
    try {
        tokenize("input \"a\"\n\nprint \"b\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Lexer, BalancedOnRandomCanonicalSources) {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto tokens = tokenize(unparse(testing::random_ast(rng)));
        auto in = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::Indent; });
        auto out = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::Dedent; });
        ASSERT_EQ(in, out);
    }
}

}  // namespace
}  // namespace sqry::source
