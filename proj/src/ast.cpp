#include <set>
#include <string>
#include <vector>

#include "sqry/source.hpp"
#include "sqry/text.hpp"

namespace sqry::source {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_terminal(const Stmt& s) {
    return std::holds_alternative<ExitStmt>(s.node) || std::holds_alternative<PrintExitStmt>(s.node);
}

void check_block(const std::vector<Stmt>& block, std::vector<Diagnostic>& out) {
    for (std::size_t i = 0; i < block.size(); ++i) {
        const Stmt& stmt = block[i];
        if (i > 0 && is_terminal(block[i - 1]))
            out.push_back({"UnreachableStatement", stmt.line(), "statement follows exit"});

        const auto* chain = std::get_if<IfChain>(&stmt.node);
        if (!chain) continue;

        bool fed = i > 0 && (std::holds_alternative<InputStmt>(block[i - 1].node) ||
                             std::holds_alternative<IfChain>(block[i - 1].node));
        if (!fed)
            out.push_back({"ChainWithoutInput", chain->line, "if chain is not preceded by input"});

        std::set<std::string> seen;
        for (const auto& alt : chain->alternatives) {
            if (!seen.insert(alt.match_text).second)
                out.push_back({"DuplicateAlternative", alt.line,
                               "duplicate alternative \"" + alt.match_text + "\""});
            if (text::trim(alt.match_text) != alt.match_text)
                out.push_back({"UnmatchableAlternative", alt.line,
                               "answers are trimmed, so \"" + alt.match_text + "\" can never match"});
            if (alt.body.empty())
                out.push_back({"EmptyBody", alt.line, "alternative has no statements"});
            check_block(alt.body, out);
        }
    }
}

void print_block(const std::vector<Stmt>& block, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
    for (const auto& stmt : block) {
        std::visit(overloaded{
                       [&](const InputStmt& s) { out += pad + "input " + quote(s.prompt) + "\n"; },
                       [&](const PrintStmt& s) { out += pad + "print " + quote(s.text) + "\n"; },
                       [&](const ExitStmt&) { out += pad + "exit\n"; },
                       [&](const PrintExitStmt& s) { out += pad + "print " + quote(s.text) + " exit\n"; },
                       [&](const IfChain& c) {
                           bool first = true;
                           for (const auto& alt : c.alternatives) {
                               out += pad + (first ? "if " : "else if ") + quote(alt.match_text) + ":\n";
                               print_block(alt.body, depth + 1, out);
                               first = false;
                           }
                       },
                   },
                   stmt.node);
    }
}

}  // namespace

std::vector<Diagnostic> validate_ast(const Ast& ast) {
    std::vector<Diagnostic> out;
    check_block(ast.statements, out);
    return out;
}

std::string quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string unparse(const Ast& ast) {
    std::string out;
    print_block(ast.statements, 0, out);
    return out;
}

}  // namespace sqry::source
