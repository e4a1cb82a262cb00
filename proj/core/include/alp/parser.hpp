//
// Copyright (c) 2026 The alp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//

#pragma once

#include <alp/model.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace alp {

enum class TokenKind : std::uint8_t {
    Ident,    // lowercase-initial name
    Var,      // uppercase- or '_'-initial name
    Int,
    // keywords
    KwAbducible, KwConstant, KwDomain, KwNot, KwTrue, KwFalse, KwIn, KwIs, KwAbs,
    // punctuation
    If,       // :-
    Arrow,    // <-
    Dot, Comma, Semicolon, LParen, RParen,
    DoubleEq, // ==
    DotDot, Slash,
    Eq, Neq, Lt, Gt, Le, Ge,
    Plus, Minus, Star,
};

const char* to_string(TokenKind k);

struct Token {
    TokenKind kind;
    std::string text;
    std::int64_t value = 0; // Int
    SourceSpan span;
};

struct Diagnostic {
    SourceSpan span;
    std::string message;

    /// `file:line:col: message`
    std::string str() const;
};

struct TokenizeResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

TokenizeResult tokenize(std::string_view text, std::string file = "<input>");

struct ParseResult {
    SourceProgram program;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

/// Recovers at the next `.` after an error and reports every error found.
ParseResult parse_program(const std::vector<Token>& tokens);

/// Tokenize and parse; lexer diagnostics come first.
ParseResult parse_text(std::string_view text, std::string file = "<input>");

/// Parse and throw the first diagnostic as an Error.
SourceProgram parse_or_throw(std::string_view text, std::string file = "<input>");

/// Parses a comma-separated list of atoms such as `position(1,C), row(R)`.
std::vector<Atom> parse_query(std::string_view text);

/// Canonical text; reparses to a structurally identical program.
std::string pretty_print(const SourceProgram& program);
std::string pretty_print(const Program& program);

} // namespace alp
