#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smelter::java {

enum class TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Punctuation,
    Comment,
    Annotation,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line;    // 1-based
    int column;  // 1-based
    std::size_t begin;  // byte offset into the source
    std::size_t end;    // one past the last byte
};

struct LexError : std::runtime_error {
    LexError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Full token stream for one compilation unit. Comments and literals are
// opaque single tokens. Single '<' and '>' come out as punctuation;
// multi-character forms (<=, >>, ...) stay operators. Throws LexError on
// an unterminated string, char, or block comment.
//
// In lenient mode an unterminated construct is absorbed as one token
// running to end of input instead of raising; the dataset pipeline uses
// this when counting tokens of arbitrary snippets.
std::vector<Token> tokenize_java(std::string_view source, bool lenient = false);

bool is_java_keyword(std::string_view word);

}  // namespace smelter::java
