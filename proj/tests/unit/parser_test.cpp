#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqry/source.hpp"

namespace sqry::source {
namespace {

std::string parse_error(std::string_view src) {
    try {
        parse_program(src);
    } catch (const SyntaxError& e) {
        return e.kind();
    }
    return "none";
}

std::vector<std::string> rules(const Ast& ast) {
    std::vector<std::string> out;
    for (const auto& d : validate_ast(ast)) out.push_back(d.rule);
    return out;
}

TEST(Parser, DemoStructure) {
    Ast ast = parse_program(testing::read_fixture("fixtures/led_demo.qrt"));
    ASSERT_EQ(ast.statements.size(), 2u);
    EXPECT_EQ(std::get<InputStmt>(ast.statements[0].node).prompt, "What led?");

    const auto& top = std::get<IfChain>(ast.statements[1].node);
    ASSERT_EQ(top.alternatives.size(), 2u);
    EXPECT_EQ(top.alternatives[0].match_text, "RUN LED");
    EXPECT_EQ(top.alternatives[1].match_text, "ERR LED");

    // ERR body: print, input, then two separate chains
    const auto& err = top.alternatives[1].body;
    ASSERT_EQ(err.size(), 4u);
    const auto& on_red = std::get<IfChain>(err[2].node);
    const auto& off_red = std::get<IfChain>(err[3].node);
    ASSERT_EQ(on_red.alternatives.size(), 1u);
    ASSERT_EQ(off_red.alternatives.size(), 1u);
    EXPECT_EQ(on_red.alternatives[0].match_text, "On Red");
    EXPECT_EQ(off_red.alternatives[0].match_text, "Off Red");

    // RUN body: the color chain has four alternatives
    const auto& run = top.alternatives[0].body;
    const auto& colors = std::get<IfChain>(run[2].node);
    ASSERT_EQ(colors.alternatives.size(), 4u);
    // "250 ms interval" branch: print then exit on its own line
    const auto& speeds = std::get<IfChain>(colors.alternatives[1].body[1].node);
    const auto& slow = speeds.alternatives[1].body;
    ASSERT_EQ(slow.size(), 2u);
    EXPECT_EQ(std::get<PrintStmt>(slow[0].node).text, "Normally operating with USB drive connected");
    EXPECT_TRUE(std::holds_alternative<ExitStmt>(slow[1].node));
}

TEST(Parser, LineNumbers) {
    Ast ast = parse_program(testing::read_fixture("fixtures/led_demo.qrt"));
    EXPECT_EQ(ast.statements[0].line(), 1);
    EXPECT_EQ(ast.statements[1].line(), 2);
    const auto& err = std::get<IfChain>(ast.statements[1].node).alternatives[1];
    EXPECT_EQ(err.line, 19);
}

TEST(Parser, SinglePrintExit) {
    Ast ast = parse_program("print \"hi\" exit");
    ASSERT_EQ(ast.statements.size(), 1u);
    EXPECT_EQ(std::get<PrintExitStmt>(ast.statements[0].node).text, "hi");
}

TEST(Parser, EmptyProgram) { EXPECT_TRUE(parse_program("").statements.empty()); }

TEST(Parser, Errors) {
    EXPECT_EQ(parse_error("input \"q\"\nelse if \"a\":\n    exit\n"), "ElseWithoutIf");
    EXPECT_EQ(parse_error("input \"q\"\nif \"a\":\nexit\n"), "EmptyBlock");
    EXPECT_EQ(parse_error("input \"q\"\nif \"a\":\n"), "EmptyBlock");
    EXPECT_EQ(parse_error("input \"q\"\nif \"a\":\n    exit\nelse:\n    exit\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("input\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("input \"q\" \"r\"\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("input \"q\"\nif \"a\"\n    exit\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("input \"q\"\n    print \"x\"\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("exit exit\n"), "UnexpectedToken");
    EXPECT_EQ(parse_error("\"loose string\"\n"), "UnexpectedToken");
}

TEST(Parser, ElseIfAfterBlankLineContinuesChain) {
    Ast ast = parse_program("input \"q\"\nif \"a\":\n    exit\n\n\nelse if \"b\":\n    exit\n");
    ASSERT_EQ(ast.statements.size(), 2u);
    EXPECT_EQ(std::get<IfChain>(ast.statements[1].node).alternatives.size(), 2u);
}

TEST(Parser, RandomTreesRoundTripThroughCanonicalSource) {
    std::mt19937 rng(20250101);
    for (int i = 0; i < 1000; ++i) {
        Ast ast = testing::random_ast(rng);
        std::string text = unparse(ast);
        Ast back = parse_program(text);
        ASSERT_EQ(back, ast) << text;
        ASSERT_EQ(unparse(back), text);
    }
}

TEST(Validate, DemoIsValid) {
    EXPECT_TRUE(validate_ast(parse_program(testing::read_fixture("fixtures/led_demo.qrt"))).empty());
}

TEST(Validate, RandomTreesAreValid) {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) ASSERT_TRUE(validate_ast(testing::random_ast(rng)).empty());
}

TEST(Validate, DuplicateAlternative) {
    Ast ast = parse_program("input \"c\"\nif \"Green\":\n    exit\nelse if \"Green\":\n    exit\n");
    EXPECT_EQ(rules(ast), std::vector<std::string>{"DuplicateAlternative"});
    auto d = validate_ast(ast);
    EXPECT_EQ(d[0].line, 4);
}

TEST(Validate, SameTextInSeparateChainsIsAllowed) {
    Ast ast = parse_program("input \"c\"\nif \"Green\":\n    print \"x\"\nif \"Green\":\n    exit\n");
    EXPECT_TRUE(validate_ast(ast).empty());
}

TEST(Validate, MatchingIsCaseSensitive) {
    Ast ast = parse_program("input \"c\"\nif \"Green\":\n    exit\nelse if \"green\":\n    exit\n");
    EXPECT_TRUE(validate_ast(ast).empty());
}

TEST(Validate, ChainWithoutInput) {
    EXPECT_EQ(rules(parse_program("if \"a\":\n    exit\n")), std::vector<std::string>{"ChainWithoutInput"});
    EXPECT_EQ(rules(parse_program("input \"q\"\nprint \"x\"\nif \"a\":\n    exit\n")),
              std::vector<std::string>{"ChainWithoutInput"});
    // first statement of a body is a different level from the outer input
    EXPECT_EQ(rules(parse_program("input \"q\"\nif \"a\":\n    if \"b\":\n        exit\n")),
              std::vector<std::string>{"ChainWithoutInput"});
}

TEST(Validate, EmptyBody) {
    Ast ast{{Stmt{InputStmt{"q", 1}}, Stmt{IfChain{{Alternative{"a", {}, 2}}, 2}}}};
    EXPECT_EQ(rules(ast), std::vector<std::string>{"EmptyBody"});
}

TEST(Validate, UnreachableAfterExit) {
    EXPECT_EQ(rules(parse_program("print \"a\" exit\nprint \"b\"\n")),
              std::vector<std::string>{"UnreachableStatement"});
    EXPECT_EQ(rules(parse_program("exit\nexit\n")), std::vector<std::string>{"UnreachableStatement"});
    EXPECT_TRUE(rules(parse_program("print \"a\"\nexit\n")).empty());
}

TEST(Validate, PaddedMatchTextCanNeverMatch) {
    EXPECT_EQ(rules(parse_program("input \"q\"\nif \" a\":\n    exit\n")),
              std::vector<std::string>{"UnmatchableAlternative"});
}

TEST(Unparse, CanonicalForm) {
    Ast ast = parse_program("input \"q\"\nif \"a\":\n  print \"x\" exit\nelse if \"b\":\n\tprint \"say \\\"hi\\\"\"\n");
    EXPECT_EQ(unparse(ast),
              "input \"q\"\n"
              "if \"a\":\n"
              "    print \"x\" exit\n"
              "else if \"b\":\n"
              "    print \"say \\\"hi\\\"\"\n");
}

}  // namespace
}  // namespace sqry::source
