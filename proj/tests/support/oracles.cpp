#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <queue>
#include <set>

namespace sqry::testing {

std::filesystem::path source_dir() { return SQRY_SOURCE_DIR; }

std::string read_fixture(const std::string& relative) {
    std::ifstream in(source_dir() / relative, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + relative);
    return {std::istreambuf_iterator<char>(in), {}};
}

// ---------------------------------------------------------------------------
// Tree-walking interpreter

namespace {

using source::IfChain;
using source::Stmt;

std::string strip(const std::string& s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

void add_unique(std::vector<std::string>& list, const std::string& s) {
    if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
}

class Interpreter {
public:
    explicit Interpreter(const std::vector<std::string>& answers) : answers_(answers) {}

    enum class Flow { Continue, Halt, Blocked };

    InterpreterResult run(const source::Ast& ast) {
        Flow f = block(ast.statements);
        result_.trace.final_status = f == Flow::Blocked ? vm::Status::AwaitingInput : vm::Status::Halted;
        return std::move(result_);
    }

private:
    Flow block(const std::vector<Stmt>& stmts) {
        for (std::size_t i = 0; i < stmts.size(); ++i) {
            const auto& node = stmts[i].node;
            if (auto* in = std::get_if<source::InputStmt>(&node)) {
                std::vector<std::string> menu;
                if (i + 1 < stmts.size())
                    if (auto* chain = std::get_if<IfChain>(&stmts[i + 1].node))
                        for (const auto& alt : chain->alternatives) add_unique(menu, alt.match_text);
                result_.trace.events.push_back({vm::Event::Kind::Prompt, in->prompt, menu});
                if (next_ == answers_.size()) {
                    for (std::size_t j = i + 1; j < stmts.size(); ++j) {
                        auto* chain = std::get_if<IfChain>(&stmts[j].node);
                        if (!chain) break;
                        for (const auto& alt : chain->alternatives) add_unique(result_.candidates, alt.match_text);
                    }
                    return Flow::Blocked;
                }
                answer_ = strip(answers_[next_++]);
            } else if (auto* p = std::get_if<source::PrintStmt>(&node)) {
                output(p->text);
            } else if (auto* pe = std::get_if<source::PrintExitStmt>(&node)) {
                output(pe->text);
                return Flow::Halt;
            } else if (std::holds_alternative<source::ExitStmt>(node)) {
                return Flow::Halt;
            } else {
                for (const auto& alt : std::get<IfChain>(node).alternatives) {
                    if (answer_ && *answer_ == alt.match_text) {
                        if (Flow f = block(alt.body); f != Flow::Continue) return f;
                        break;
                    }
                }
            }
        }
        return Flow::Continue;
    }

    void output(const std::string& text) { result_.trace.events.push_back({vm::Event::Kind::Output, text, {}}); }

    const std::vector<std::string>& answers_;
    std::size_t next_ = 0;
    std::optional<std::string> answer_;
    InterpreterResult result_;
};

void enumerate(const source::Ast& ast, const std::string& unmatched, std::vector<std::string>& prefix,
               std::vector<std::vector<std::string>>& out) {
    auto r = interpret(ast, prefix);
    if (r.trace.final_status == vm::Status::Halted) {
        out.push_back(prefix);
        return;
    }
    r.candidates.push_back(unmatched);
    for (const auto& c : r.candidates) {
        prefix.push_back(c);
        enumerate(ast, unmatched, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

InterpreterResult interpret(const source::Ast& ast, const std::vector<std::string>& answers) {
    return Interpreter(answers).run(ast);
}

std::vector<std::vector<std::string>> enumerate_answer_paths(const source::Ast& ast, const std::string& unmatched) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> prefix;
    enumerate(ast, unmatched, prefix, out);
    return out;
}

// ---------------------------------------------------------------------------
// Reference bit writer

namespace {

std::string bits_of(std::uint64_t value, int width) {
    std::string s;
    for (int i = width - 1; i >= 0; --i) s += ((value >> i) & 1) ? '1' : '0';
    return s;
}

int opcode_code(ir::Opcode op) {
    switch (op) {
        case ir::Opcode::Input: return 0b000;
        case ir::Opcode::If: return 0b001;
        case ir::Opcode::Goto: return 0b010;
        case ir::Opcode::Print: return 0b011;
        case ir::Opcode::PrintEx: return 0b100;
        case ir::Opcode::Exit: return 0b101;
        case ir::Opcode::Nop: return 0b110;
    }
    return 0b111;
}

}  // namespace

std::string reference_payload_bits(const ir::Program& program) {
    const std::size_t n = program.size();
    int width = 1;
    while ((std::uint64_t{1} << width) < n + 1) ++width;

    std::string bits = "0001" "0001" + bits_of(n, 12);
    for (const auto& ins : program.instructions) {
        bits += bits_of(static_cast<std::uint64_t>(opcode_code(ins.opcode)), 3);
        bool text = ins.opcode == ir::Opcode::Input || ins.opcode == ir::Opcode::If ||
                    ins.opcode == ir::Opcode::Print || ins.opcode == ir::Opcode::PrintEx;
        bool target = ins.opcode == ir::Opcode::If || ins.opcode == ir::Opcode::Goto;
        if (text) {
            bits += bits_of(ins.text.size(), 12);
            for (unsigned char c : ins.text) bits += bits_of(c, 8);
        }
        if (target) bits += bits_of(ins.target, width);
    }
    return bits;
}

std::vector<std::uint8_t> pack_bits(const std::string& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
    return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

const std::vector<std::string> kPieces = {
    "Green",   "RUN LED", "Flashing Green", "500 ms", "if",    "else if", "exit", "print", "say \"hi\"",
    "a\\b",    "Ω",       "→ next",         "LED:",   "(3)",   "goto",    "日本", "ok",    "Off",
    "\\\"",    "x",       "Y",              "a  b",   "tab\tin", "#1",
};

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Stmt> random_block(std::mt19937& rng, int depth, bool allow_empty);

IfChain random_chain(std::mt19937& rng, int depth) {
    IfChain chain;
    int n = pick(rng, 1, 3);
    std::set<std::string> used;
    while (static_cast<int>(chain.alternatives.size()) < n) {
        std::string text = chance(rng, 0.03) ? std::string() : random_text(rng);
        if (!text.empty() && text != strip(text)) continue;
        if (!used.insert(text).second) continue;
        chain.alternatives.push_back({text, random_block(rng, depth + 1, false), 0});
    }
    return chain;
}

std::vector<Stmt> random_block(std::mt19937& rng, int depth, bool allow_empty) {
    std::vector<Stmt> out;
    int len = allow_empty ? pick(rng, 0, 5) : pick(rng, 1, 4);
    for (int k = 0; k < len; ++k) {
        bool last = k == len - 1;
        bool fed = !out.empty() && (std::holds_alternative<source::InputStmt>(out.back().node) ||
                                    std::holds_alternative<IfChain>(out.back().node));
        bool after_input = !out.empty() && std::holds_alternative<source::InputStmt>(out.back().node);
        if (fed && depth < 3 && chance(rng, after_input ? 0.75 : 0.3)) {
            out.push_back({random_chain(rng, depth)});
            continue;
        }
        int kind = pick(rng, 0, last ? 5 : 2);
        switch (kind) {
            case 0:
            case 1:
                out.push_back({source::InputStmt{random_text(rng), 0}});
                break;
            case 2:
                out.push_back({source::PrintStmt{random_text(rng), 0}});
                break;
            case 3:
                out.push_back({source::ExitStmt{0}});
                break;
            case 4:
                out.push_back({source::PrintExitStmt{random_text(rng), 0}});
                break;
            default:
                out.push_back({source::PrintStmt{random_text(rng), 0}});
                out.push_back({source::ExitStmt{0}});
                break;
        }
    }
    return out;
}

}  // namespace

std::string random_text(std::mt19937& rng) {
    std::string s = kPieces[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(kPieces.size()) - 1))];
    int extra = pick(rng, 0, 2);
    for (int i = 0; i < extra; ++i)
        s += " " + kPieces[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(kPieces.size()) - 1))];
    return s;
}

source::Ast random_ast(std::mt19937& rng) { return {random_block(rng, 0, true)}; }

ir::Program random_program(std::mt19937& rng, std::size_t max_size) {
    std::size_t n = chance(rng, 0.05) ? static_cast<std::size_t>(pick(rng, 0, 600))
                                      : static_cast<std::size_t>(pick(rng, 0, static_cast<int>(max_size)));
    ir::Program p;
    for (std::size_t i = 0; i < n; ++i) {
        auto op = ir::kAllOpcodes[static_cast<std::size_t>(pick(rng, 0, 6))];
        ir::Instruction ins{op, {}, 0};
        if (ir::has_text(op)) ins.text = chance(rng, 0.05) ? std::string() : random_text(rng);
        if (ir::has_target(op)) ins.target = static_cast<ir::Address>(pick(rng, 0, static_cast<int>(n)));
        p.instructions.push_back(std::move(ins));
    }
    return p;
}

std::vector<bool> reachable(const ir::Program& program) {
    const auto n = program.size();
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> work;
    auto visit = [&](std::size_t a) {
        if (a < n && !seen[a]) {
            seen[a] = true;
            work.push(a);
        }
    };
    visit(0);
    while (!work.empty()) {
        auto pc = work.front();
        work.pop();
        const auto& ins = program[pc];
        switch (ins.opcode) {
            case ir::Opcode::If:
                visit(ins.target);
                visit(pc + 1);
                break;
            case ir::Opcode::Goto:
                visit(ins.target);
                break;
            case ir::Opcode::PrintEx:
            case ir::Opcode::Exit:
                break;
            default:
                visit(pc + 1);
        }
    }
    return seen;
}

}  // namespace sqry::testing
