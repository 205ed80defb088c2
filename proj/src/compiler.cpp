#include "sqry/compiler.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace sqry {

namespace {

using source::Stmt;

struct Label {
    std::size_t id;
};

/// Emits instructions whose targets refer to labels, then patches every
/// target once all labels are bound.
class Emitter {
public:
    Label new_label() {
        bound_.emplace_back();
        return {bound_.size() - 1};
    }

    void bind(Label label) {
        if (bound_[label.id]) throw std::logic_error("label bound twice");
        bound_[label.id] = static_cast<ir::Address>(code_.size());
    }

    void emit(ir::Instruction ins) { code_.push_back(std::move(ins)); }

    void emit_jump(ir::Instruction ins, Label label) {
        fixups_.push_back({code_.size(), label});
        code_.push_back(std::move(ins));
    }

    ir::Program finish() && {
        for (const auto& [at, label] : fixups_) {
            const auto& addr = bound_[label.id];
            if (!addr) throw std::logic_error("UnresolvedLabel: compiler defect");
            code_[at].target = *addr;
        }
        return {std::move(code_)};
    }

private:
    struct Fixup {
        std::size_t at;
        Label label;
    };

    std::vector<ir::Instruction> code_;
    std::vector<std::optional<ir::Address>> bound_;
    std::vector<Fixup> fixups_;
};

bool falls_through(const std::vector<Stmt>& block) {
    if (block.empty()) return true;
    const auto& last = block.back().node;
    return !std::holds_alternative<source::ExitStmt>(last) &&
           !std::holds_alternative<source::PrintExitStmt>(last);
}

void emit_block(const std::vector<Stmt>& block, Emitter& em);

void emit_chain(const source::IfChain& chain, Emitter& em) {
    Label cont = em.new_label();
    std::vector<Label> starts;
    for (const auto& alt : chain.alternatives) {
        starts.push_back(em.new_label());
        em.emit_jump(ir::Instruction::if_(alt.match_text, 0), starts.back());
    }
    em.emit_jump(ir::Instruction::goto_(0), cont);
    for (std::size_t i = 0; i < chain.alternatives.size(); ++i) {
        const auto& body = chain.alternatives[i].body;
        em.bind(starts[i]);
        emit_block(body, em);
        if (falls_through(body)) em.emit_jump(ir::Instruction::goto_(0), cont);
    }
    em.bind(cont);
}

void emit_block(const std::vector<Stmt>& block, Emitter& em) {
    for (std::size_t i = 0; i < block.size(); ++i) {
        const auto& node = block[i].node;
        if (const auto* s = std::get_if<source::InputStmt>(&node)) {
            em.emit(ir::Instruction::input(s->prompt));
        } else if (const auto* s = std::get_if<source::PrintStmt>(&node)) {
            bool exit_next = i + 1 < block.size() && std::holds_alternative<source::ExitStmt>(block[i + 1].node);
            if (exit_next) {
                em.emit(ir::Instruction::printex(s->text));
                ++i;
            } else {
                em.emit(ir::Instruction::print(s->text));
            }
        } else if (const auto* s = std::get_if<source::PrintExitStmt>(&node)) {
            em.emit(ir::Instruction::printex(s->text));
        } else if (std::holds_alternative<source::ExitStmt>(node)) {
            em.emit(ir::Instruction::exit());
        } else {
            emit_chain(std::get<source::IfChain>(node), em);
        }
    }
}

std::string summarize(const std::vector<source::Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        if (!out.empty()) out += "; ";
        out += d.rule + " at line " + std::to_string(d.line);
    }
    return out;
}

}  // namespace

CompileError::CompileError(std::vector<source::Diagnostic> diagnostics)
    : Error(ErrorCategory::Validate, diagnostics.empty() ? "InvalidProgram" : diagnostics.front().rule,
            summarize(diagnostics),
            diagnostics.empty() ? std::nullopt : std::optional<int>(diagnostics.front().line)),
      diagnostics_(std::move(diagnostics)) {}

ir::Program compile(const source::Ast& ast) {
    if (auto diags = source::validate_ast(ast); !diags.empty()) throw CompileError(std::move(diags));
    Emitter em;
    emit_block(ast.statements, em);
    return std::move(em).finish();
}

}  // namespace sqry
