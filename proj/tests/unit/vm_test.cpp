#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqry/vm.hpp"

namespace sqry::vm {
namespace {

using ir::Instruction;

ir::Program listing() { return ir::parse_ir(testing::read_fixture("fixtures/led_listing.qri")); }

std::vector<std::string> outputs(const Trace& t) {
    std::vector<std::string> out;
    for (const auto& e : t.events)
        if (e.kind == Event::Kind::Output) out.push_back(e.text);
    return out;
}

Trace run(const ir::Program& p, std::vector<std::string> answers) { return run_script(p, answers); }

TEST(Vm, ReferenceListingPaths) {
    auto p = listing();
    using V = std::vector<std::string>;
    EXPECT_EQ(outputs(run(p, {"RUN LED", "Green"})), (V{"Operating status of the switch", "Normal operation"}));
    EXPECT_EQ(outputs(run(p, {"RUN LED", "Flashing Green", "500 ms interval"})),
              (V{"Operating status of the switch", "Reset button pressed"}));
    EXPECT_EQ(outputs(run(p, {"RUN LED", "Flashing Green", "250 ms interval"})),
              (V{"Operating status of the switch", "Normally operating with USB drive connected"}));
    EXPECT_EQ(outputs(run(p, {"RUN LED", "Flashing Red"})), (V{"Operating status of the switch", "Initializing"}));
    EXPECT_EQ(outputs(run(p, {"RUN LED", "Off"})), (V{"Operating status of the switch", "Power-off"}));
    EXPECT_EQ(outputs(run(p, {"ERR LED", "On Red"})),
              (V{"Error status", "Initial error occurred/USB flash drive failed"}));
    EXPECT_EQ(outputs(run(p, {"ERR LED", "Off Red"})), (V{"Error status", "No error"}));
    auto none = run(p, {"SYNC LED"});
    EXPECT_TRUE(outputs(none).empty());
    EXPECT_EQ(none.final_status, Status::Halted);
}

TEST(Vm, ReferenceListingFallthroughQuirk) {
    // an unmatched speed jumps to (20) in the listing as printed
    EXPECT_EQ(outputs(run(listing(), {"RUN LED", "Flashing Green", "1 s"})),
              (std::vector<std::string>{"Operating status of the switch", "Initializing"}));
}

TEST(Vm, StepwiseSession) {
    auto s0 = load_program(listing());
    EXPECT_EQ(s0.status, Status::Running);
    auto s1 = advance(s0);
    EXPECT_EQ(s1.status, Status::AwaitingInput);
    EXPECT_EQ(s1.pc, 0u);
    EXPECT_EQ(s1.prompt(), "What led?");
    EXPECT_EQ(enumerate_options(s1), (InteractionRequest{"What led?", {"RUN LED", "ERR LED"}, true}));

    auto s2 = advance(provide_answer(s1, "RUN LED"));
    EXPECT_EQ(s2.pc, 5u);
    EXPECT_EQ(s2.outputs, std::vector<std::string>{"Operating status of the switch"});
    EXPECT_EQ(enumerate_options(s2).options,
              (std::vector<std::string>{"Green", "Flashing Green", "Flashing Red", "Off"}));

    auto s3 = advance(provide_answer(s2, "Green"));
    EXPECT_EQ(s3.status, Status::Halted);
    EXPECT_EQ(s3.outputs.back(), "Normal operation");
}

TEST(Vm, OptionsOnlyCoverAdjacentIfs) {
    auto s = advance(provide_answer(advance(load_program(listing())), "ERR LED"));
    EXPECT_EQ(s.pc, 24u);
    // "Off Red" sits behind a GOTO and is reachable only as free text
    EXPECT_EQ(enumerate_options(s).options, std::vector<std::string>{"On Red"});
    auto done = advance(provide_answer(s, "Off Red"));
    EXPECT_EQ(done.outputs.back(), "No error");
}

TEST(Vm, OptionsAreDeduplicated) {
    ir::Program p{{Instruction::input("q"), Instruction::if_("a", 4), Instruction::if_("a", 4),
                   Instruction::if_("b", 4)}};
    auto s = advance(load_program(p));
    EXPECT_EQ(enumerate_options(s).options, (std::vector<std::string>{"a", "b"}));
}

TEST(Vm, StatesAreValues) {
    auto s1 = advance(load_program(listing()));
    auto copy = s1;
    auto s2 = advance(provide_answer(s1, "RUN LED"));
    EXPECT_EQ(s1.pc, copy.pc);
    EXPECT_EQ(s1.status, copy.status);
    EXPECT_EQ(s1.outputs, copy.outputs);
    EXPECT_EQ(s1.answer, copy.answer);
    EXPECT_NE(s2.pc, s1.pc);
    EXPECT_EQ(s1.program, s2.program);
    // branching from the same saved state
    auto other = advance(provide_answer(s1, "ERR LED"));
    EXPECT_EQ(other.outputs, std::vector<std::string>{"Error status"});
}

TEST(Vm, AnswersAreTrimmedAndCaseSensitive) {
    auto p = listing();
    EXPECT_EQ(run(p, {"  RUN LED\t", " Green "}), run(p, {"RUN LED", "Green"}));
    EXPECT_TRUE(outputs(run(p, {"run led"})).empty());
    auto s = provide_answer(advance(load_program(p)), "\n RUN LED \r\n");
    EXPECT_EQ(s.answer, "RUN LED");
}

TEST(Vm, TrimEquivalenceOnRandomPadding) {
    auto p = listing();
    std::mt19937 rng(11);
    const std::vector<std::string> pads = {"", " ", "  ", "\t", " \t ", "\r\n"};
    auto pad = [&] { return pads[std::uniform_int_distribution<std::size_t>(0, pads.size() - 1)(rng)]; };
    for (int i = 0; i < 100; ++i) {
        std::vector<std::string> plain = {"RUN LED", "Flashing Green", "250 ms interval"};
        std::vector<std::string> padded;
        for (const auto& a : plain) padded.push_back(pad() + a + pad());
        ASSERT_EQ(run(p, padded), run(p, plain));
    }
}

TEST(Vm, PartialScriptStopsAtPrompt) {
    auto t = run(listing(), {"RUN LED"});
    EXPECT_EQ(t.final_status, Status::AwaitingInput);
    ASSERT_EQ(t.events.size(), 3u);
    EXPECT_EQ(t.events[2].kind, Event::Kind::Prompt);
    EXPECT_EQ(t.events[2].text, "What color?");
}

TEST(Vm, EmptyProgramHaltsImmediately) {
    auto s = load_program({});
    EXPECT_EQ(s.status, Status::Halted);
    EXPECT_EQ(run({}, {}).events.size(), 0u);
}

TEST(Vm, JumpPastEndHalts) {
    auto t = run({{Instruction::goto_(2), Instruction::print("never")}}, {});
    EXPECT_EQ(t.final_status, Status::Halted);
    EXPECT_TRUE(t.events.empty());
    EXPECT_EQ(outputs(run({{Instruction::nop(), Instruction::print("x")}}, {})),
              std::vector<std::string>{"x"});
}

TEST(Vm, StepBudget) {
    ir::Program loop{{Instruction::goto_(0)}};
    try {
        advance(load_program(loop));
        FAIL();
    } catch (const VmError& e) {
        EXPECT_EQ(e.kind(), "StepBudgetExhausted");
        EXPECT_EQ(e.category(), ErrorCategory::Runtime);
    }
    // the budget counts instructions per advance call; exactly 10000 is allowed
    ir::Program line;
    line.instructions.assign(9999, Instruction::nop());
    line.instructions.push_back(Instruction::exit());
    EXPECT_EQ(advance(load_program(line)).status, Status::Halted);
    line.instructions.insert(line.instructions.begin(), Instruction::nop());
    EXPECT_THROW(advance(load_program(line)), VmError);
    EXPECT_NO_THROW(advance(load_program(line, 20'000)));
}

TEST(Vm, Misuse) {
    auto s = advance(load_program(listing()));
    EXPECT_THROW(advance(s), VmError);
    auto halted = advance(provide_answer(s, "nope"));
    EXPECT_THROW(provide_answer(halted, "x"), VmError);
    EXPECT_THROW(enumerate_options(halted), VmError);
    EXPECT_THROW(load_program({{Instruction::goto_(3)}}), ir::IrError);
}

}  // namespace
}  // namespace sqry::vm
