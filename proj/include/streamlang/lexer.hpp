#pragma once

#include <string>
#include <vector>

#include "streamlang/diagnostics.hpp"

namespace streamlang {

enum class TokenKind {
    Identifier,
    IntLit,
    FloatLit,   // trailing-dot form "2." allowed
    StringLit,
    FormatLit,  // "%wav", leading % kept in text
    Punct,      // ( ) [ ] , = ->
    Keyword,    // def end fun true false
    Label,      // identifier immediately followed by '='; text excludes the '='
    End
};

struct Token {
    TokenKind kind;
    std::string text;    // for StringLit: the decoded value, quotes/escapes removed
    Position pos;

    // Source form that relexes to this same token.
    std::string print() const {
        switch (kind) {
            case TokenKind::Label: return text + "=";
            case TokenKind::StringLit: {
                std::string out = "\"";
                for (char c : text) {
                    if (c == '"' || c == '\\') out.push_back('\\');
                    out.push_back(c);
                }
                out.push_back('"');
                return out;
            }
            default: return text;
        }
    }

    bool is_punct(const char* p) const { return kind == TokenKind::Punct && text == p; }
    bool is_keyword(const char* k) const { return kind == TokenKind::Keyword && text == k; }
};

namespace detail {
inline bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}
inline bool keyword_text(const std::string& s) {
    return s == "def" || s == "end" || s == "fun" || s == "true" || s == "false";
}
}  // namespace detail

class Lexer {
public:
    explicit Lexer(std::string text) : src_(std::move(text)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (eof()) break;
            out.push_back(next_token());
        }
        out.push_back(Token{TokenKind::End, "", here()});
        return out;
    }

private:
    std::string src_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;

    bool eof() const { return i_ >= src_.size(); }
    char peek(size_t off = 0) const { return i_ + off < src_.size() ? src_[i_ + off] : '\0'; }
    Position here() const { return Position{line_, col_}; }

    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        Position start = here();
        char c = peek();
        if (c >= '0' && c <= '9') return lex_number(start);
        if (detail::ident_start(c)) return lex_identifier(start);
        if (c == '"') return lex_string(start);
        if (c == '%') return lex_format(start);
        return lex_punct(start);
    }

    Token lex_number(Position start) {
        std::string text;
        while (peek() >= '0' && peek() <= '9') text.push_back(advance());
        bool is_float = false;
        // "2." is a float; "fade.initial"-style dots never follow a digit run
        // because identifiers cannot start with a digit.
        if (peek() == '.') {
            is_float = true;
            text.push_back(advance());
            while (peek() >= '0' && peek() <= '9') text.push_back(advance());
        }
        return Token{is_float ? TokenKind::FloatLit : TokenKind::IntLit, text, start};
    }

    Token lex_identifier(Position start) {
        std::string text;
        text.push_back(advance());
        for (;;) {
            if (detail::ident_char(peek())) {
                text.push_back(advance());
            } else if (peek() == '.' && detail::ident_start(peek(1))) {
                // dotted names: namespacing is lexical ("fade.initial")
                text.push_back(advance());
            } else {
                break;
            }
        }
        if (detail::keyword_text(text)) return Token{TokenKind::Keyword, text, start};
        // "name=" with no space in between is a label (or a binding; the
        // parser decides from position). "==" never occurs in the grammar.
        if (peek() == '=' && peek(1) != '=') {
            advance();
            return Token{TokenKind::Label, text, start};
        }
        return Token{TokenKind::Identifier, text, start};
    }

    Token lex_string(Position start) {
        advance();  // opening quote
        std::string value;
        for (;;) {
            if (eof() || peek() == '\n')
                fail(errc::lex, start, "unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail(errc::lex, start, "unterminated string literal");
                char e = advance();
                if (e == '"' || e == '\\')
                    value.push_back(e);
                else
                    fail(errc::lex, here(), std::string("unsupported escape '\\") + e + "'");
            } else {
                value.push_back(c);
            }
        }
        return Token{TokenKind::StringLit, value, start};
    }

    Token lex_format(Position start) {
        std::string text;
        text.push_back(advance());  // '%'
        if (!detail::ident_start(peek()))
            fail(errc::lex, start, "expected format name after '%'");
        while (detail::ident_char(peek())) text.push_back(advance());
        return Token{TokenKind::FormatLit, text, start};
    }

    Token lex_punct(Position start) {
        char c = peek();
        if (c == '-' && peek(1) == '>') {
            advance();
            advance();
            return Token{TokenKind::Punct, "->", start};
        }
        switch (c) {
            case '(': case ')': case '[': case ']': case ',': case '=':
                advance();
                return Token{TokenKind::Punct, std::string(1, c), start};
            default:
                fail(errc::lex, start, std::string("illegal character '") + c + "'");
        }
    }
};

inline std::vector<Token> tokenize(const std::string& text) {
    return Lexer(text).run();
}

}  // namespace streamlang
