#pragma once

// QRtree source language: lexer, parser, structural validation and the
// canonical printer used for round-trip checks.
//
//   input "What led?"
//   if "RUN LED":
//       print "Operating status of the switch"
//       ...
//   else if "ERR LED":
//       print "No error" exit

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqry/error.hpp"

namespace sqry::source {

enum class TokenKind {
    KwInput,
    KwIf,
    KwElse,
    KwPrint,
    KwExit,
    String,
    Colon,
    Indent,
    Dedent,
    Newline,
};

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;  // unquoted, unescaped content for String tokens
    int line = 0;

    bool operator==(const Token&) const = default;
};

/// Thrown by tokenize() and parse_source(). `kind()` is one of
/// UnterminatedString, InconsistentIndentation, InvalidEscape,
/// UnexpectedCharacter, UnexpectedToken, ElseWithoutIf, EmptyBlock.
class SyntaxError : public Error {
public:
    SyntaxError(std::string kind, int line, std::string message)
        : Error(ErrorCategory::Parse, std::move(kind), std::move(message), line) {}
};

/// Splits source text into tokens. Blank lines are ignored, tabs in the
/// indentation count as four spaces, LF and CRLF line endings are accepted.
/// Every successful result has as many Dedent tokens as Indent tokens.
std::vector<Token> tokenize(std::string_view source);

// Statement nodes carry the source line they started on. The line is
// diagnostic metadata only and is ignored by operator==.

struct InputStmt {
    std::string prompt;
    int line = 0;
    bool operator==(const InputStmt& o) const { return prompt == o.prompt; }
};

struct PrintStmt {
    std::string text;
    int line = 0;
    bool operator==(const PrintStmt& o) const { return text == o.text; }
};

struct ExitStmt {
    int line = 0;
    bool operator==(const ExitStmt&) const { return true; }
};

struct PrintExitStmt {
    std::string text;
    int line = 0;
    bool operator==(const PrintExitStmt& o) const { return text == o.text; }
};

struct Stmt;

struct Alternative {
    std::string match_text;
    std::vector<Stmt> body;
    int line = 0;
    bool operator==(const Alternative& o) const;
};

/// `if` followed by zero or more `else if` at the same indentation.
struct IfChain {
    std::vector<Alternative> alternatives;
    int line = 0;
    bool operator==(const IfChain& o) const { return alternatives == o.alternatives; }
};

struct Stmt {
    std::variant<InputStmt, IfChain, PrintStmt, ExitStmt, PrintExitStmt> node;

    int line() const;
    bool operator==(const Stmt& o) const { return node == o.node; }
};

inline bool Alternative::operator==(const Alternative& o) const {
    return match_text == o.match_text && body == o.body;
}

struct Ast {
    std::vector<Stmt> statements;
    bool operator==(const Ast&) const = default;
};

Ast parse_source(const std::vector<Token>& tokens);

/// tokenize + parse_source.
Ast parse_program(std::string_view source);

struct Diagnostic {
    std::string rule;  // EmptyBody, ChainWithoutInput, DuplicateAlternative, UnreachableStatement
    int line = 0;
    std::string message;
};

/// Checks the structural rules the compiler relies on. An empty result means
/// the tree is compilable.
std::vector<Diagnostic> validate_ast(const Ast& ast);

/// Canonical source form: four-space indentation, `print "x" exit` for
/// PrintExitStmt, `else if` for every alternative after the first.
/// parse_program(unparse(ast)) == ast for every well-formed tree.
std::string unparse(const Ast& ast);

/// Quotes and escapes a string literal (`"` and `\` are backslash-escaped).
std::string quote(std::string_view text);

}  // namespace sqry::source
