#include <string>
#include <string_view>
#include <vector>

#include "sqry/source.hpp"

namespace sqry::source {

namespace {

constexpr int kTabWidth = 4;

struct Keyword {
    std::string_view word;
    TokenKind kind;
};

constexpr Keyword kKeywords[] = {
    {"input", TokenKind::KwInput}, {"if", TokenKind::KwIf},     {"else", TokenKind::KwElse},
    {"print", TokenKind::KwPrint}, {"exit", TokenKind::KwExit},
};

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {
        if (source_.starts_with("\xEF\xBB\xBF")) source_.remove_prefix(3);
    }

    std::vector<Token> run() {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= source_.size()) {
            std::size_t eol = source_.find('\n', pos);
            if (eol == std::string_view::npos) eol = source_.size();
            std::string_view line = source_.substr(pos, eol - pos);
            if (line.ends_with('\r')) line.remove_suffix(1);
            ++line_no;
            lex_line(line, line_no);
            pos = eol + 1;
        }
        while (levels_.size() > 1) {
            levels_.pop_back();
            out_.push_back({TokenKind::Dedent, {}, line_no});
        }
        return std::move(out_);
    }

private:
    void lex_line(std::string_view line, int line_no) {
        int width = 0;
        std::size_t i = 0;
        for (; i < line.size() && (line[i] == ' ' || line[i] == '\t'); ++i)
            width += line[i] == '\t' ? kTabWidth : 1;
        if (i == line.size()) return;  // blank

        if (width > levels_.back()) {
            levels_.push_back(width);
            out_.push_back({TokenKind::Indent, {}, line_no});
        } else {
            while (width < levels_.back()) {
                levels_.pop_back();
                out_.push_back({TokenKind::Dedent, {}, line_no});
            }
            if (width != levels_.back())
                throw SyntaxError("InconsistentIndentation", line_no,
                                  "indentation matches no enclosing block");
        }

        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t') {
                ++i;
            } else if (c == ':') {
                out_.push_back({TokenKind::Colon, ":", line_no});
                ++i;
            } else if (c == '"') {
                i = lex_string(line, i, line_no);
            } else if (is_word_char(c)) {
                std::size_t start = i;
                while (i < line.size() && is_word_char(line[i])) ++i;
                lex_word(line.substr(start, i - start), line_no);
            } else {
                throw SyntaxError("UnexpectedCharacter", line_no,
                                  std::string("unexpected '") + c + "'");
            }
        }
        out_.push_back({TokenKind::Newline, {}, line_no});
    }

    std::size_t lex_string(std::string_view line, std::size_t i, int line_no) {
        std::string text;
        for (++i; i < line.size(); ++i) {
            char c = line[i];
            if (c == '"') {
                out_.push_back({TokenKind::String, std::move(text), line_no});
                return i + 1;
            }
            if (c == '\\') {
                if (i + 1 >= line.size()) break;
                char next = line[++i];
                if (next != '"' && next != '\\')
                    throw SyntaxError("InvalidEscape", line_no,
                                      std::string("unknown escape '\\") + next + "'");
                text += next;
            } else {
                text += c;
            }
        }
        throw SyntaxError("UnterminatedString", line_no, "string literal runs past end of line");
    }

    void lex_word(std::string_view word, int line_no) {
        for (const auto& kw : kKeywords) {
            if (kw.word == word) {
                out_.push_back({kw.kind, std::string(word), line_no});
                return;
            }
        }
        throw SyntaxError("UnexpectedCharacter", line_no, "unknown word '" + std::string(word) + "'");
    }

    std::string_view source_;
    std::vector<int> levels_{0};
    std::vector<Token> out_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::KwInput: return "KW_INPUT";
        case TokenKind::KwIf: return "KW_IF";
        case TokenKind::KwElse: return "KW_ELSE";
        case TokenKind::KwPrint: return "KW_PRINT";
        case TokenKind::KwExit: return "KW_EXIT";
        case TokenKind::String: return "STRING";
        case TokenKind::Colon: return "COLON";
        case TokenKind::Indent: return "INDENT";
        case TokenKind::Dedent: return "DEDENT";
        case TokenKind::Newline: return "NEWLINE";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace sqry::source
