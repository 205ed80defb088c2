#include "sqry/vm.hpp"

#include <algorithm>

#include "sqry/text.hpp"

namespace sqry::vm {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Running: return "running";
        case Status::AwaitingInput: return "awaiting_input";
        case Status::Halted: return "halted";
    }
    return "?";
}

std::string_view VmState::prompt() const {
    if (status != Status::AwaitingInput) return {};
    return (*program)[pc].text;
}

VmState load_program(ir::Program program, std::size_t step_budget) {
    ir::validate(program);
    VmState state;
    state.program = std::make_shared<const ir::Program>(std::move(program));
    state.status = state.program->size() == 0 ? Status::Halted : Status::Running;
    state.step_budget = step_budget;
    return state;
}

VmState advance(VmState state) {
    if (state.status != Status::Running) throw VmError("NotRunning", "advance needs a running machine");
    const auto& code = *state.program;
    const auto n = static_cast<ir::Address>(code.size());

    for (std::size_t steps = 0;; ++steps) {
        if (state.pc == n) {
            state.status = Status::Halted;
            return state;
        }
        if (steps == state.step_budget)
            throw VmError("StepBudgetExhausted",
                          "no input or halt within " + std::to_string(state.step_budget) + " instructions");

        const auto& ins = code[state.pc];
        switch (ins.opcode) {
            case ir::Opcode::Input:
                state.status = Status::AwaitingInput;
                return state;
            case ir::Opcode::If:
                state.pc = state.answer == ins.text ? ins.target : state.pc + 1;
                break;
            case ir::Opcode::Goto:
                state.pc = ins.target;
                break;
            case ir::Opcode::Print:
                state.outputs.push_back(ins.text);
                ++state.pc;
                break;
            case ir::Opcode::PrintEx:
                state.outputs.push_back(ins.text);
                state.status = Status::Halted;
                return state;
            case ir::Opcode::Exit:
                state.status = Status::Halted;
                return state;
            case ir::Opcode::Nop:
                ++state.pc;
                break;
        }
    }
}

VmState provide_answer(VmState state, std::string_view text) {
    if (state.status != Status::AwaitingInput)
        throw VmError("NotAwaitingInput", "machine is " + std::string(to_string(state.status)));
    state.answer = std::string(text::trim(text));
    ++state.pc;
    state.status = Status::Running;
    return state;
}

InteractionRequest enumerate_options(const VmState& state) {
    if (state.status != Status::AwaitingInput)
        throw VmError("NotAwaitingInput", "machine is " + std::string(to_string(state.status)));
    const auto& code = *state.program;
    InteractionRequest req{std::string(state.prompt()), {}, true};
    for (auto p = state.pc + 1; p < code.size() && code[p].opcode == ir::Opcode::If; ++p) {
        if (std::find(req.options.begin(), req.options.end(), code[p].text) == req.options.end())
            req.options.push_back(code[p].text);
    }
    return req;
}

Trace run_script(const ir::Program& program, std::span<const std::string> answers, std::size_t step_budget) {
    Trace trace;
    VmState state = load_program(program, step_budget);
    std::size_t next_answer = 0;
    while (state.status != Status::Halted) {
        if (state.status == Status::Running) {
            auto printed = state.outputs.size();
            state = advance(std::move(state));
            for (auto i = printed; i < state.outputs.size(); ++i)
                trace.events.push_back({Event::Kind::Output, state.outputs[i], {}});
            continue;
        }
        auto req = enumerate_options(state);
        trace.events.push_back({Event::Kind::Prompt, req.prompt, req.options});
        if (next_answer == answers.size()) break;
        state = provide_answer(std::move(state), answers[next_answer++]);
    }
    trace.final_status = state.status;
    return trace;
}

}  // namespace sqry::vm
