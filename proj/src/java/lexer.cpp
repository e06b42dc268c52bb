#include "smelter/java/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace smelter::java {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "abstract", "assert",    "boolean",  "break",      "byte",      "case",
    "catch",    "char",      "class",    "const",      "continue",  "default",
    "do",       "double",    "else",     "enum",       "extends",   "final",
    "finally",  "float",     "for",      "goto",       "if",        "implements",
    "import",   "instanceof", "int",     "interface",  "long",      "native",
    "new",      "package",   "private",  "protected",  "public",    "record",
    "return",   "short",     "static",   "strictfp",   "super",     "switch",
    "synchronized", "this",  "throw",    "throws",     "transient", "try",
    "void",     "volatile",  "while",
};

inline bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
inline bool is_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Multi-character operators, longest first within each leading char.
// '<' and '>' on their own are punctuation (generics are not
// disambiguated from relational uses), so they are absent here as
// single characters but present in their compound forms.
const std::array<std::string_view, 36> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "&&",  "||", "+=", "-=", "*=", "/=", "%=",
    "&=",  "|=",  "^=",  "+",   "-",   "*",  "/",  "%",  "=",  "!",  "&",
    "|",   "^",   "~",
};

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void advance_n(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) advance();
    }
};

}  // namespace

bool is_java_keyword(std::string_view word) { return kKeywords.count(word) > 0; }

std::vector<Token> tokenize_java(std::string_view source, bool lenient) {
    std::vector<Token> tokens;
    Cursor c{source};

    auto emit = [&](TokenKind kind, std::size_t begin, int line, int col) {
        tokens.push_back(Token{kind, std::string(source.substr(begin, c.pos - begin)),
                               line, col, begin, c.pos});
    };

    while (!c.done()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f') {
            c.advance();
            continue;
        }
        std::size_t begin = c.pos;
        int line = c.line;
        int col = c.col;

        // Comments
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.done() && c.peek() != '\n') c.advance();
            emit(TokenKind::Comment, begin, line, col);
            continue;
        }
        if (ch == '/' && c.peek(1) == '*') {
            c.advance_n(2);
            bool closed = false;
            while (!c.done()) {
                if (c.peek() == '*' && c.peek(1) == '/') {
                    c.advance_n(2);
                    closed = true;
                    break;
                }
                c.advance();
            }
            if (!closed && !lenient) throw LexError("unterminated block comment", line, col);
            emit(TokenKind::Comment, begin, line, col);
            continue;
        }

        // String literals, including text blocks
        if (ch == '"') {
            if (c.peek(1) == '"' && c.peek(2) == '"') {
                c.advance_n(3);
                bool closed = false;
                while (!c.done()) {
                    if (c.peek() == '"' && c.peek(1) == '"' && c.peek(2) == '"') {
                        c.advance_n(3);
                        closed = true;
                        break;
                    }
                    if (c.peek() == '\\' && c.pos + 1 < source.size()) c.advance();
                    c.advance();
                }
                if (!closed && !lenient) throw LexError("unterminated text block", line, col);
                emit(TokenKind::StringLiteral, begin, line, col);
                continue;
            }
            c.advance();
            bool closed = false;
            while (!c.done()) {
                char s = c.peek();
                if (s == '\\' && c.pos + 1 < source.size()) {
                    c.advance_n(2);
                    continue;
                }
                if (s == '"') {
                    c.advance();
                    closed = true;
                    break;
                }
                if (s == '\n') break;  // strings do not span lines
                c.advance();
            }
            if (!closed && !lenient) throw LexError("unterminated string literal", line, col);
            emit(TokenKind::StringLiteral, begin, line, col);
            continue;
        }

        // Char literals
        if (ch == '\'') {
            c.advance();
            bool closed = false;
            while (!c.done()) {
                char s = c.peek();
                if (s == '\\' && c.pos + 1 < source.size()) {
                    c.advance_n(2);
                    continue;
                }
                if (s == '\'') {
                    c.advance();
                    closed = true;
                    break;
                }
                if (s == '\n') break;
                c.advance();
            }
            if (!closed && !lenient) throw LexError("unterminated char literal", line, col);
            emit(TokenKind::CharLiteral, begin, line, col);
            continue;
        }

        // Annotations: '@' plus a dotted name. '@interface' stays two tokens.
        bool is_annotation_decl = source.substr(c.pos + 1, 9) == "interface" &&
                                  !is_ident_part(c.peek(10));
        if (ch == '@' && is_ident_start(c.peek(1)) && !is_annotation_decl) {
            c.advance();
            while (!c.done() && (is_ident_part(c.peek()) ||
                                 (c.peek() == '.' && is_ident_start(c.peek(1))))) {
                c.advance();
            }
            emit(TokenKind::Annotation, begin, line, col);
            continue;
        }

        // Numbers
        if (is_digit(ch) || (ch == '.' && is_digit(c.peek(1)))) {
            c.advance();
            while (!c.done()) {
                char s = c.peek();
                if (std::isalnum(static_cast<unsigned char>(s)) || s == '_' ||
                    (s == '.' && is_digit(c.peek(1)))) {
                    c.advance();
                } else if ((s == '+' || s == '-') &&
                           (c.pos > begin && (source[c.pos - 1] == 'e' || source[c.pos - 1] == 'E' ||
                                              source[c.pos - 1] == 'p' || source[c.pos - 1] == 'P'))) {
                    c.advance();
                } else {
                    break;
                }
            }
            emit(TokenKind::NumberLiteral, begin, line, col);
            continue;
        }

        // Identifiers and keywords
        if (is_ident_start(ch)) {
            c.advance();
            while (!c.done() && is_ident_part(c.peek())) c.advance();
            std::string_view word = source.substr(begin, c.pos - begin);
            emit(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                 begin, line, col);
            continue;
        }

        // Operators (longest match)
        bool matched = false;
        for (std::string_view op : kOperators) {
            if (source.substr(c.pos, op.size()) == op) {
                c.advance_n(op.size());
                emit(TokenKind::Operator, begin, line, col);
                matched = true;
                break;
            }
        }
        if (matched) continue;

        if (ch == '?' || ch == ':') {
            c.advance();
            emit(TokenKind::Operator, begin, line, col);
            continue;
        }

        // Everything else is punctuation: braces, parens, brackets,
        // semicolons, commas, dots, bare angle brackets, stray '@', '#'.
        c.advance();
        emit(TokenKind::Punctuation, begin, line, col);
    }
    return tokens;
}

}  // namespace smelter::java
