#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqry/ir.hpp"

namespace sqry::ir {
namespace {

std::string ir_error(std::string_view text) {
    try {
        parse_ir(text);
    } catch (const IrError& e) {
        return e.kind();
    }
    return "none";
}

TEST(Ir, SevenOpcodesWithDistinctMnemonics) {
    ASSERT_EQ(kAllOpcodes.size(), 7u);
    for (auto op : kAllOpcodes) EXPECT_EQ(opcode_from_mnemonic(mnemonic(op)), op);
    EXPECT_FALSE(opcode_from_mnemonic("jump"));
    EXPECT_FALSE(opcode_from_mnemonic("PRINT"));
}

TEST(Ir, FieldShapes) {
    EXPECT_TRUE(has_text(Opcode::If) && has_target(Opcode::If));
    EXPECT_TRUE(has_text(Opcode::Input) && !has_target(Opcode::Input));
    EXPECT_TRUE(!has_text(Opcode::Goto) && has_target(Opcode::Goto));
    EXPECT_TRUE(!has_text(Opcode::Exit) && !has_target(Opcode::Exit));
    EXPECT_TRUE(!has_text(Opcode::Nop) && !has_target(Opcode::Nop));
}

TEST(Ir, FormatSingleLines) {
    EXPECT_EQ(format_ir({{Instruction::exit()}}), "(0) exit");
    EXPECT_EQ(format_ir({{Instruction::input("q"), Instruction::if_("RUN LED", 4)}}),
              "(0) input \"q\"\n(1) if \"RUN LED\" (4)");
    EXPECT_EQ(format_ir({{Instruction::print("say \"hi\" \\")}}), R"((0) print "say \"hi\" \\")");
    EXPECT_EQ(format_ir({}), "");
}

TEST(Ir, ParseSingleLines) {
    auto p = parse_ir("(0) input \"q\"\n(1) if \"RUN LED\" (2)\n");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[1], Instruction::if_("RUN LED", 2));
    EXPECT_EQ(parse_ir("(0) goto (0)")[0], Instruction::goto_(0));
    EXPECT_EQ(parse_ir("(0) goto (1)")[0], Instruction::goto_(1));  // one past the end
    EXPECT_EQ(parse_ir("(0) nop\r\n(1) exit\r\n").size(), 2u);
    EXPECT_EQ(parse_ir("").size(), 0u);
}

TEST(Ir, ReferenceListing) {
    auto text = testing::read_fixture("fixtures/led_listing.qri");
    Program p = parse_ir(text);
    ASSERT_EQ(p.size(), 31u);
    EXPECT_EQ(p[0], Instruction::input("What led?"));
    EXPECT_EQ(p[1], Instruction::if_("RUN LED", 4));
    EXPECT_EQ(p[3], Instruction::goto_(31));
    EXPECT_EQ(p[19], Instruction::printex("Normally operating with USB drive connected"));
    EXPECT_EQ(p[30], Instruction::printex("No error"));
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    EXPECT_EQ(format_ir(p), text);
}

TEST(Ir, ParseErrors) {
    EXPECT_EQ(ir_error("(1) exit"), "BadAddressSequence");
    EXPECT_EQ(ir_error("(0) exit\n(0) exit"), "BadAddressSequence");
    EXPECT_EQ(ir_error("(0) jump (0)"), "UnknownOpcode");
    EXPECT_EQ(ir_error("(0) if \"a\""), "MissingField");
    EXPECT_EQ(ir_error("(0) input"), "MissingField");
    EXPECT_EQ(ir_error("exit"), "MissingField");
    EXPECT_EQ(ir_error("(0) exit (0)"), "UnexpectedField");
    EXPECT_EQ(ir_error("(0) goto (0) \"x\""), "UnexpectedField");
    EXPECT_EQ(ir_error("(0) print \"open"), "BadString");
    EXPECT_EQ(ir_error("(0) print \"bad \\n\""), "BadString");
    EXPECT_EQ(ir_error("(0) goto (2)"), "TargetOutOfRange");
    EXPECT_EQ(ir_error("(0) exit\n\n(1) exit"), "MissingField");
}

TEST(Ir, ErrorsCarryLineNumbers) {
    try {
        parse_ir("(0) exit\n(1) exit\n(2) jump");
        FAIL();
    } catch (const IrError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Ir, ValidateInMemory) {
    EXPECT_THROW(validate({{Instruction{Opcode::Exit, "x", 0}}}), IrError);
    EXPECT_THROW(validate({{Instruction{Opcode::Print, "x", 1}}}), IrError);
    EXPECT_THROW(validate({{Instruction::print("a\nb")}}), IrError);
    EXPECT_THROW(validate({{Instruction::print("\xFF")}}), IrError);
    EXPECT_NO_THROW(validate({{Instruction::if_("", 1)}}));
}

TEST(Ir, RandomProgramsRoundTrip) {
    std::mt19937 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        Program p = testing::random_program(rng);
        std::string text = format_ir(p);
        ASSERT_EQ(parse_ir(text), p) << text;
        ASSERT_EQ(format_ir(parse_ir(text)), text);
    }
}

}  // namespace
}  // namespace sqry::ir
