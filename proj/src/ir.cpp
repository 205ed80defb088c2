#include "sqry/ir.hpp"

#include <charconv>
#include <string>

#include "sqry/source.hpp"
#include "sqry/text.hpp"

namespace sqry::ir {

namespace {

constexpr std::string_view kMnemonics[] = {"input", "if", "goto", "print", "printex", "exit", "nop"};

class LineCursor {
public:
    LineCursor(std::string_view line, int line_no) : s_(line), line_no_(line_no) {}

    void skip_spaces() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    }

    bool done() {
        skip_spaces();
        return i_ >= s_.size();
    }

    char peek() {
        skip_spaces();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    /// `(123)`
    std::optional<Address> paren_number() {
        if (peek() != '(') return std::nullopt;
        ++i_;
        std::size_t start = i_;
        while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
        Address value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + i_, value);
        if (ec != std::errc{} || i_ >= s_.size() || s_[i_] != ')')
            throw IrError("MissingField", line_no_, "malformed address");
        ++i_;
        return value;
    }

    std::string_view word() {
        skip_spaces();
        std::size_t start = i_;
        while (i_ < s_.size() && s_[i_] >= 'a' && s_[i_] <= 'z') ++i_;
        return s_.substr(start, i_ - start);
    }

    std::string quoted() {
        if (peek() != '"') throw IrError("MissingField", line_no_, "expected quoted text");
        std::string out;
        for (++i_; i_ < s_.size(); ++i_) {
            char c = s_[i_];
            if (c == '"') {
                ++i_;
                return out;
            }
            if (c == '\\' && i_ + 1 < s_.size() && (s_[i_ + 1] == '"' || s_[i_ + 1] == '\\')) c = s_[++i_];
            else if (c == '\\') throw IrError("BadString", line_no_, "unknown escape");
            out += c;
        }
        throw IrError("BadString", line_no_, "unterminated string");
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    int line_no_;
};

Instruction parse_line(std::string_view line, int line_no, Address expected_index) {
    LineCursor cur(line, line_no);
    auto index = cur.paren_number();
    if (!index) throw IrError("MissingField", line_no, "line must start with its address");
    if (*index != expected_index)
        throw IrError("BadAddressSequence", line_no,
                      "expected (" + std::to_string(expected_index) + "), found (" + std::to_string(*index) + ")");

    std::string_view word = cur.word();
    auto op = opcode_from_mnemonic(word);
    if (!op) throw IrError("UnknownOpcode", line_no, "unknown opcode '" + std::string(word) + "'");

    Instruction ins{*op, {}, 0};
    if (has_text(*op)) ins.text = cur.quoted();
    if (has_target(*op)) {
        auto t = cur.paren_number();
        if (!t) throw IrError("MissingField", line_no, std::string(word) + " needs a target");
        ins.target = *t;
    }
    if (!cur.done()) throw IrError("UnexpectedField", line_no, "trailing content after instruction");
    return ins;
}

}  // namespace

std::string_view mnemonic(Opcode op) { return kMnemonics[static_cast<std::size_t>(op)]; }

std::optional<Opcode> opcode_from_mnemonic(std::string_view word) {
    for (auto op : kAllOpcodes)
        if (mnemonic(op) == word) return op;
    return std::nullopt;
}

bool has_text(Opcode op) {
    return op == Opcode::Input || op == Opcode::If || op == Opcode::Print || op == Opcode::PrintEx;
}

bool has_target(Opcode op) { return op == Opcode::If || op == Opcode::Goto; }

void validate(const Program& program) {
    const auto n = program.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ins = program[i];
        int line = static_cast<int>(i) + 1;
        if (!has_text(ins.opcode) && !ins.text.empty())
            throw IrError("UnexpectedField", line, std::string(mnemonic(ins.opcode)) + " carries no text");
        if (!has_target(ins.opcode) && ins.target != 0)
            throw IrError("UnexpectedField", line, std::string(mnemonic(ins.opcode)) + " carries no target");
        if (!text::is_line_safe(ins.text))
            throw IrError("BadString", line, "text must be UTF-8 without line breaks");
        if (has_target(ins.opcode) && ins.target > n)
            throw IrError("TargetOutOfRange", line,
                          "target " + std::to_string(ins.target) + " exceeds " + std::to_string(n));
    }
}

std::string format_ir(const Program& program) {
    std::string out;
    for (std::size_t i = 0; i < program.size(); ++i) {
        const auto& ins = program[i];
        if (i > 0) out += '\n';
        out += '(' + std::to_string(i) + ") ";
        out += mnemonic(ins.opcode);
        if (has_text(ins.opcode)) out += ' ' + source::quote(ins.text);
        if (has_target(ins.opcode)) out += " (" + std::to_string(ins.target) + ')';
    }
    return out;
}

Program parse_ir(std::string_view text) {
    Program program;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (line.ends_with('\r')) line.remove_suffix(1);
        ++line_no;
        program.instructions.push_back(
            parse_line(line, line_no, static_cast<Address>(program.instructions.size())));
        pos = eol + 1;
    }
    validate(program);
    return program;
}

}  // namespace sqry::ir
