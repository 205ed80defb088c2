#pragma once

// The intermediate language: seven opcodes, numeric jump targets, and the
// numbered one-instruction-per-line text form
//
//   (0) input "What led?"
//   (1) if "RUN LED" (4)
//   (3) goto (31)

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqry/error.hpp"

namespace sqry::ir {

enum class Opcode : std::uint8_t {
    Input,
    If,
    Goto,
    Print,
    PrintEx,  // print, then halt
    Exit,
    Nop,
};

inline constexpr std::array kAllOpcodes = {Opcode::Input, Opcode::If,   Opcode::Goto, Opcode::Print,
                                           Opcode::PrintEx, Opcode::Exit, Opcode::Nop};

std::string_view mnemonic(Opcode op);
std::optional<Opcode> opcode_from_mnemonic(std::string_view word);

bool has_text(Opcode op);
bool has_target(Opcode op);

using Address = std::uint32_t;

struct Instruction {
    Opcode opcode = Opcode::Nop;
    std::string text;    // empty unless has_text(opcode)
    Address target = 0;  // 0 unless has_target(opcode)

    static Instruction input(std::string prompt) { return {Opcode::Input, std::move(prompt), 0}; }
    static Instruction if_(std::string match, Address t) { return {Opcode::If, std::move(match), t}; }
    static Instruction goto_(Address t) { return {Opcode::Goto, {}, t}; }
    static Instruction print(std::string s) { return {Opcode::Print, std::move(s), 0}; }
    static Instruction printex(std::string s) { return {Opcode::PrintEx, std::move(s), 0}; }
    static Instruction exit() { return {Opcode::Exit, {}, 0}; }
    static Instruction nop() { return {Opcode::Nop, {}, 0}; }

    bool operator==(const Instruction&) const = default;
};

/// Instructions are addressed 0..N-1. A target equal to N is the legal
/// "one past the end" address and halts the machine.
struct Program {
    std::vector<Instruction> instructions;

    std::size_t size() const { return instructions.size(); }
    const Instruction& operator[](std::size_t i) const { return instructions[i]; }

    bool operator==(const Program&) const = default;
};

/// Bad textual IR or an invalid in-memory program. `kind()` is one of
/// BadAddressSequence, UnknownOpcode, MissingField, UnexpectedField,
/// BadString, TargetOutOfRange.
class IrError : public Error {
public:
    IrError(std::string kind, std::optional<int> line, std::string message)
        : Error(ErrorCategory::Parse, std::move(kind), std::move(message), line) {}
};

/// Throws IrError when a field does not match its opcode, a string is not
/// line-safe UTF-8, or a target exceeds N.
void validate(const Program& program);

/// One line per instruction, `(i) opcode "text" (target)`, joined by LF with
/// no trailing newline.
std::string format_ir(const Program& program);

/// Inverse of format_ir. Accepts CRLF and a trailing newline; blank lines are
/// not allowed between instructions.
Program parse_ir(std::string_view text);

}  // namespace sqry::ir
