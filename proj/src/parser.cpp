#include <string>
#include <vector>

#include "sqry/source.hpp"

namespace sqry::source {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    Ast run() {
        Ast ast;
        ast.statements = parse_block();
        if (!at_end()) unexpected("statement");
        return ast;
    }

private:
    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }

    bool peek_is(TokenKind kind) const { return !at_end() && tokens_[pos_].kind == kind; }

    int current_line() const {
        if (!at_end()) return tokens_[pos_].line;
        return tokens_.empty() ? 1 : tokens_.back().line;
    }

    [[noreturn]] void unexpected(const std::string& expected) const {
        std::string got = at_end() ? "end of input" : std::string(to_string(tokens_[pos_].kind));
        throw SyntaxError("UnexpectedToken", current_line(), "expected " + expected + ", got " + got);
    }

    const Token& expect(TokenKind kind) {
        if (!peek_is(kind)) unexpected(std::string(to_string(kind)));
        return tokens_[pos_++];
    }

    std::vector<Stmt> parse_block() {
        std::vector<Stmt> out;
        while (!at_end() && !peek_is(TokenKind::Dedent)) out.push_back(parse_statement());
        return out;
    }

    Stmt parse_statement() {
        const Token& head = *peek();
        switch (head.kind) {
            case TokenKind::KwInput: {
                ++pos_;
                std::string prompt = expect(TokenKind::String).text;
                expect(TokenKind::Newline);
                return {InputStmt{std::move(prompt), head.line}};
            }
            case TokenKind::KwPrint: {
                ++pos_;
                std::string text = expect(TokenKind::String).text;
                if (peek_is(TokenKind::KwExit)) {
                    ++pos_;
                    expect(TokenKind::Newline);
                    return {PrintExitStmt{std::move(text), head.line}};
                }
                expect(TokenKind::Newline);
                return {PrintStmt{std::move(text), head.line}};
            }
            case TokenKind::KwExit:
                ++pos_;
                expect(TokenKind::Newline);
                return {ExitStmt{head.line}};
            case TokenKind::KwIf:
                return {parse_chain()};
            case TokenKind::KwElse:
                throw SyntaxError("ElseWithoutIf", head.line, "'else' does not follow an if block");
            case TokenKind::Indent:
                throw SyntaxError("UnexpectedToken", head.line, "unexpected indentation");
            default:
                unexpected("statement");
        }
    }

    IfChain parse_chain() {
        IfChain chain;
        chain.line = current_line();
        expect(TokenKind::KwIf);
        chain.alternatives.push_back(parse_alternative());
        while (peek_is(TokenKind::KwElse)) {
            ++pos_;
            expect(TokenKind::KwIf);
            chain.alternatives.push_back(parse_alternative());
        }
        return chain;
    }

    Alternative parse_alternative() {
        Alternative alt;
        alt.line = current_line();
        alt.match_text = expect(TokenKind::String).text;
        expect(TokenKind::Colon);
        expect(TokenKind::Newline);
        if (!peek_is(TokenKind::Indent))
            throw SyntaxError("EmptyBlock", alt.line, "if block has no indented body");
        ++pos_;
        alt.body = parse_block();
        expect(TokenKind::Dedent);
        return alt;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

int Stmt::line() const {
    return std::visit([](const auto& s) { return s.line; }, node);
}

Ast parse_source(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

Ast parse_program(std::string_view source) { return parse_source(tokenize(source)); }

}  // namespace sqry::source
