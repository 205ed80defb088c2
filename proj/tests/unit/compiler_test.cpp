#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sqry/compiler.hpp"
#include "sqry/vm.hpp"

namespace sqry {
namespace {

using ir::Instruction;

// Worked out by hand from the demo source. Differs from the reference listing
// where that one lets unmatched answers fall into a sibling branch.
const char* kDemoListing = R"((0) input "What led?"
(1) if "RUN LED" (4)
(2) if "ERR LED" (22)
(3) goto (31)
(4) print "Operating status of the switch"
(5) input "What color?"
(6) if "Green" (11)
(7) if "Flashing Green" (12)
(8) if "Flashing Red" (19)
(9) if "Off" (20)
(10) goto (21)
(11) printex "Normal operation"
(12) input "At what speed?"
(13) if "500 ms interval" (16)
(14) if "250 ms interval" (17)
(15) goto (18)
(16) printex "Reset button pressed"
(17) printex "Normally operating with USB drive connected"
(18) goto (21)
(19) printex "Initializing"
(20) printex "Power-off"
(21) goto (31)
(22) print "Error status"
(23) input "What color?"
(24) if "On Red" (26)
(25) goto (27)
(26) printex "Initial error occurred/USB flash drive failed"
(27) if "Off Red" (29)
(28) goto (30)
(29) printex "No error"
(30) goto (31))";

ir::Program compile_text(std::string_view src) { return compile(source::parse_program(src)); }

TEST(Compiler, DemoListing) {
    auto program = compile_text(testing::read_fixture("fixtures/led_demo.qrt"));
    EXPECT_EQ(ir::format_ir(program), kDemoListing);
}

TEST(Compiler, DemoAgreesWithReferenceListingOnMatchedPaths) {
    auto ast = source::parse_program(testing::read_fixture("fixtures/led_demo.qrt"));
    auto compiled = compile(ast);
    auto reference = ir::parse_ir(testing::read_fixture("fixtures/led_listing.qri"));
    int matched = 0;
    for (const auto& answers : testing::enumerate_answer_paths(ast, "\x01")) {
        if (std::find(answers.begin(), answers.end(), "\x01") != answers.end()) continue;
        ++matched;
        EXPECT_EQ(vm::run_script(compiled, answers), vm::run_script(reference, answers));
    }
    EXPECT_EQ(matched, 7);
}

TEST(Compiler, PrintExitStatement) {
    EXPECT_EQ(compile_text("print \"hi\" exit"), (ir::Program{{Instruction::printex("hi")}}));
}

TEST(Compiler, PrintThenExitIsFused) {
    EXPECT_EQ(compile_text("print \"hi\"\nexit\n"), (ir::Program{{Instruction::printex("hi")}}));
    EXPECT_EQ(compile_text("print \"a\"\nprint \"b\"\n"),
              (ir::Program{{Instruction::print("a"), Instruction::print("b")}}));
}

TEST(Compiler, SingleAlternativeEndingInExit) {
    auto p = compile_text("input \"Q\"\nif \"A\":\n    print \"yes\" exit\n");
    EXPECT_EQ(p, (ir::Program{{Instruction::input("Q"), Instruction::if_("A", 3), Instruction::goto_(4),
                               Instruction::printex("yes")}}));
}

TEST(Compiler, BodyThatFallsThroughJumpsToContinuation) {
    auto p = compile_text("input \"Q\"\nif \"A\":\n    print \"a\"\nelse if \"B\":\n    print \"b\"\nprint \"after\"\n");
    EXPECT_EQ(ir::format_ir(p),
              "(0) input \"Q\"\n"
              "(1) if \"A\" (4)\n"
              "(2) if \"B\" (6)\n"
              "(3) goto (8)\n"
              "(4) print \"a\"\n"
              "(5) goto (8)\n"
              "(6) print \"b\"\n"
              "(7) goto (8)\n"
              "(8) print \"after\"");
}

TEST(Compiler, EmptyProgram) { EXPECT_EQ(compile_text("").size(), 0u); }

TEST(Compiler, RejectsInvalidTrees) {
    try {
        compile_text("if \"a\":\n    exit\n");
        FAIL();
    } catch (const CompileError& e) {
        ASSERT_EQ(e.diagnostics().size(), 1u);
        EXPECT_EQ(e.diagnostics()[0].rule, "ChainWithoutInput");
        EXPECT_EQ(e.category(), ErrorCategory::Validate);
    }
}

TEST(Compiler, TargetsInRangeAndEverythingReachable) {
    std::mt19937 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        auto ast = testing::random_ast(rng);
        auto p = compile(ast);
        ASSERT_NO_THROW(ir::validate(p));
        auto seen = testing::reachable(p);
        for (std::size_t a = 0; a < p.size(); ++a) ASSERT_TRUE(seen[a]) << a << "\n" << ir::format_ir(p);
    }
    auto demo = compile_text(testing::read_fixture("fixtures/led_demo.qrt"));
    for (bool r : testing::reachable(demo)) EXPECT_TRUE(r);
}

TEST(Compiler, Deterministic) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto ast = testing::random_ast(rng);
        ASSERT_EQ(compile(ast), compile(ast));
    }
}

void expect_equivalent(const source::Ast& ast, std::mt19937& rng) {
    auto program = compile(ast);
    auto paths = testing::enumerate_answer_paths(ast, "\x01unmatched");
    for (int k = 0; k < 3; ++k) {
        std::vector<std::string> script;
        int len = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int j = 0; j < len; ++j) script.push_back(testing::random_text(rng));
        paths.push_back(script);
    }
    for (const auto& answers : paths) {
        auto expected = testing::interpret(ast, answers).trace;
        auto actual = vm::run_script(program, answers);
        ASSERT_EQ(actual, expected) << source::unparse(ast) << "\n" << ir::format_ir(program);
    }
}

TEST(Compiler, MatchesTreeInterpreterOnDemo) {
    std::mt19937 rng(1);
    auto ast = source::parse_program(testing::read_fixture("fixtures/led_demo.qrt"));
    auto paths = testing::enumerate_answer_paths(ast, "nothing");
    EXPECT_GE(paths.size(), 8u);
    expect_equivalent(ast, rng);
}

TEST(Compiler, MatchesTreeInterpreterOnRandomTrees) {
    std::mt19937 rng(8080);
    for (int i = 0; i < 1000; ++i) expect_equivalent(testing::random_ast(rng), rng);
}

}  // namespace
}  // namespace sqry
