#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqry/error.hpp"
#include "sqry/ir.hpp"

namespace sqry::vm {

inline constexpr std::size_t kDefaultStepBudget = 10'000;

enum class Status { Running, AwaitingInput, Halted };

std::string_view to_string(Status status);

/// One interactive session. States are values: every transition returns a
/// new state and leaves its argument untouched, and copies share the
/// program.
struct VmState {
    std::shared_ptr<const ir::Program> program;
    ir::Address pc = 0;
    std::optional<std::string> answer;
    std::vector<std::string> outputs;  // append-only over the session
    Status status = Status::Halted;
    std::size_t step_budget = kDefaultStepBudget;

    /// Prompt text of the INPUT at pc; empty unless AwaitingInput.
    std::string_view prompt() const;
};

/// `kind()` is NotAwaitingInput, NotRunning or StepBudgetExhausted.
class VmError : public Error {
public:
    VmError(std::string kind, std::string message)
        : Error(ErrorCategory::Runtime, std::move(kind), std::move(message)) {}
};

struct InteractionRequest {
    std::string prompt;
    std::vector<std::string> options;
    bool allows_free_text = true;

    bool operator==(const InteractionRequest&) const = default;
};

/// Validates the program (ir::validate) and positions the machine at 0. An
/// empty program is halted immediately.
VmState load_program(ir::Program program, std::size_t step_budget = kDefaultStepBudget);

/// Runs until the machine waits for input or halts. Throws
/// StepBudgetExhausted when more than step_budget instructions execute in
/// one call.
VmState advance(VmState state);

/// Stores the trimmed answer and moves past the INPUT.
VmState provide_answer(VmState state, std::string_view text);

/// The prompt plus the match texts of the consecutive IF instructions right
/// after the INPUT, first occurrence order, duplicates dropped. Answers
/// tested further away are still reachable through free text.
InteractionRequest enumerate_options(const VmState& state);

/// Observable interaction, as consumed by both runners and the conformance
/// vectors.
struct Event {
    enum class Kind { Output, Prompt };

    Kind kind;
    std::string text;                  // output text or prompt
    std::vector<std::string> options;  // prompt only

    bool operator==(const Event&) const = default;
};

struct Trace {
    std::vector<Event> events;
    Status final_status = Status::Halted;

    bool operator==(const Trace&) const = default;
};

/// Feeds `answers` in order. Stops at the first prompt after the answers run
/// out (final_status AwaitingInput) or when the machine halts; unused
/// answers are ignored.
Trace run_script(const ir::Program& program, std::span<const std::string> answers,
                 std::size_t step_budget = kDefaultStepBudget);

}  // namespace sqry::vm
