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

#include <alp/parser.hpp>

#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace alp {

const char* to_string(TokenKind k) {
    switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Var: return "variable";
    case TokenKind::Int: return "integer";
    case TokenKind::KwAbducible: return "'abducible'";
    case TokenKind::KwConstant: return "'constant'";
    case TokenKind::KwDomain: return "'domain'";
    case TokenKind::KwNot: return "'not'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::KwIs: return "'is'";
    case TokenKind::KwAbs: return "'abs'";
    case TokenKind::If: return "':-'";
    case TokenKind::Arrow: return "'<-'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::DoubleEq: return "'=='";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Eq: return "'='";
    case TokenKind::Neq: return "'\\='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Le: return "'=<'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    }
    return "?";
}

namespace {

std::string describe(const Token& t) {
    switch (t.kind) {
    case TokenKind::Ident:
    case TokenKind::Var:
    case TokenKind::Int: return std::string(to_string(t.kind)) + " '" + t.text + "'";
    default: return to_string(t.kind);
    }
}

} // namespace

std::string Diagnostic::str() const { return span.str() + ": " + message; }

TokenizeResult tokenize(std::string_view text, std::string file) {
    static const std::map<std::string_view, TokenKind> keywords = {
        {"abducible", TokenKind::KwAbducible}, {"constant", TokenKind::KwConstant},
        {"domain", TokenKind::KwDomain},       {"not", TokenKind::KwNot},
        {"true", TokenKind::KwTrue},           {"false", TokenKind::KwFalse},
        {"in", TokenKind::KwIn},               {"is", TokenKind::KwIs},
        {"abs", TokenKind::KwAbs},
    };
    // Longest match first.
    static const std::pair<std::string_view, TokenKind> punct[] = {
        {":-", TokenKind::If},   {"<-", TokenKind::Arrow},    {"==", TokenKind::DoubleEq},
        {"..", TokenKind::DotDot}, {"\\=", TokenKind::Neq},   {"=<", TokenKind::Le},
        {">=", TokenKind::Ge},   {".", TokenKind::Dot},       {",", TokenKind::Comma},
        {";", TokenKind::Semicolon}, {"(", TokenKind::LParen}, {")", TokenKind::RParen},
        {"/", TokenKind::Slash}, {"=", TokenKind::Eq},        {"<", TokenKind::Lt},
        {">", TokenKind::Gt},    {"+", TokenKind::Plus},      {"-", TokenKind::Minus},
        {"*", TokenKind::Star},
    };

    TokenizeResult res;
    std::uint32_t line = 1, col = 1;
    std::size_t i = 0;
    auto span_at = [&](std::size_t off) { return SourceSpan{file, line, col, static_cast<std::uint32_t>(off)}; };
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
    };
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        SourceSpan sp = span_at(i);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && is_ident(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            TokenKind kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? TokenKind::Var : TokenKind::Ident;
            if (kind == TokenKind::Ident) {
                if (auto it = keywords.find(word); it != keywords.end()) kind = it->second;
            }
            res.tokens.push_back({kind, std::move(word), 0, sp});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            std::int64_t v = 0;
            bool overflow = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                int d = text[j] - '0';
                if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) overflow = true;
                else v = v * 10 + d;
                ++j;
            }
            if (overflow) res.diagnostics.push_back({sp, "integer literal out of range"});
            res.tokens.push_back({TokenKind::Int, std::string(text.substr(i, j - i)), v, sp});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (const auto& [s, kind] : punct) {
            if (text.substr(i, s.size()) == s) {
                res.tokens.push_back({kind, std::string(s), 0, sp});
                advance(s.size());
                matched = true;
                break;
            }
        }
        if (matched) continue;
        std::ostringstream msg;
        unsigned char uc = static_cast<unsigned char>(c);
        if (std::isprint(uc)) msg << "illegal character '" << c << "'";
        else msg << "illegal byte 0x" << std::hex << static_cast<int>(uc);
        res.diagnostics.push_back({sp, msg.str()});
        advance(1);
    }
    return res;
}

namespace {

struct SyntaxError {
    SourceSpan span;
    std::string message;
};

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    ParseResult run() {
        ParseResult res;
        while (!at_end()) {
            std::size_t start = pos_;
            try {
                statement(res.program);
            }
            catch (const SyntaxError& e) {
                res.diagnostics.push_back({e.span, e.message});
                recover(start);
            }
        }
        check_arities(res);
        return res;
    }

    std::vector<Atom> query() {
        std::vector<Atom> out;
        if (at_end()) return out;
        for (;;) {
            if (!peek(TokenKind::Ident)) fail("expected query atom");
            out.push_back(atom(false));
            if (!accept(TokenKind::Comma)) break;
        }
        accept(TokenKind::Dot);
        if (!at_end()) fail("unexpected " + std::string(to_string(cur().kind)) + " in query");
        return out;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& cur() const { return toks_[pos_]; }
    bool peek(TokenKind k, std::size_t ahead = 0) const {
        return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].kind == k;
    }
    SourceSpan here() const {
        if (!at_end()) return cur().span;
        if (toks_.empty()) return {};
        SourceSpan s = toks_.back().span;
        s.column += static_cast<std::uint32_t>(toks_.back().text.size());
        s.offset += static_cast<std::uint32_t>(toks_.back().text.size());
        return s;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError{here(), msg}; }
    [[noreturn]] void fail_at(const SourceSpan& sp, const std::string& msg) const { throw SyntaxError{sp, msg}; }
    bool accept(TokenKind k) {
        if (peek(k)) { ++pos_; return true; }
        return false;
    }
    const Token& expect(TokenKind k, const char* what) {
        if (at_end()) fail(std::string("unterminated clause: expected ") + what + " before end of input");
        if (!peek(k)) fail(std::string("expected ") + what + ", found " + describe(cur()));
        return toks_[pos_++];
    }

    void recover(std::size_t start) {
        if (pos_ == start) ++pos_;
        while (!at_end() && !peek(TokenKind::Dot)) ++pos_;
        accept(TokenKind::Dot);
    }

    void statement(SourceProgram& prog) {
        SourceSpan sp = here();
        if (accept(TokenKind::KwAbducible)) return abducible(prog, sp);
        if (accept(TokenKind::KwConstant)) {
            std::string name = expect(TokenKind::Ident, "constant name").text;
            expect(TokenKind::DoubleEq, "'=='");
            Term v = expr();
            expect(TokenKind::Dot, "'.'");
            prog.decls.constants.push_back({std::move(name), std::move(v), sp});
            return;
        }
        if (accept(TokenKind::KwDomain)) {
            std::string name = expect(TokenKind::Ident, "domain name").text;
            expect(TokenKind::DoubleEq, "'=='");
            Term lo = expr();
            expect(TokenKind::DotDot, "'..'");
            Term hi = expr();
            expect(TokenKind::Dot, "'.'");
            prog.decls.domains.push_back({std::move(name), std::move(lo), std::move(hi), sp});
            return;
        }
        Formula head = formula(true);
        if (accept(TokenKind::Dot)) {
            prog.definitions.push_back({definition_head(head, sp), Formula::truth(), sp});
            return;
        }
        if (accept(TokenKind::If)) {
            Atom h = definition_head(head, sp);
            Formula body = formula(false);
            expect(TokenKind::Dot, "'.'");
            prog.definitions.push_back({std::move(h), std::move(body), sp});
            return;
        }
        if (accept(TokenKind::Arrow)) {
            Formula body = formula(false);
            expect(TokenKind::Dot, "'.'");
            prog.constraints.push_back({std::move(head), std::move(body), sp});
            return;
        }
        if (at_end()) fail("unterminated clause: expected '.', ':-' or '<-' before end of input");
        fail("expected '.', ':-' or '<-', found " + describe(cur()));
    }

    Atom definition_head(const Formula& f, const SourceSpan& sp) const {
        if (f.kind != Formula::Kind::Lit || f.literal.kind != Literal::Kind::Positive)
            fail_at(sp, "definition head must be a single atom (use '<-' for constraints)");
        return f.literal.atom;
    }

    void abducible(SourceProgram& prog, const SourceSpan& sp) {
        bool wrapped = false;
        if (peek(TokenKind::LParen) && peek(TokenKind::Ident, 1) && peek(TokenKind::Slash, 2)) {
            ++pos_;
            wrapped = true;
        }
        const Token& name = expect(TokenKind::Ident, "predicate name");
        AbducibleDecl d{name.text, 0, {}, sp};
        if (accept(TokenKind::Slash)) {
            d.arity = static_cast<std::uint32_t>(expect(TokenKind::Int, "arity").value);
        }
        else if (!wrapped && accept(TokenKind::LParen)) {
            do {
                d.arg_types.push_back(expect(TokenKind::Ident, "domain name").text);
            } while (accept(TokenKind::Comma));
            expect(TokenKind::RParen, "')'");
            d.arity = static_cast<std::uint32_t>(d.arg_types.size());
        }
        else {
            fail("expected '/' or argument domains after abducible predicate name");
        }
        if (wrapped) expect(TokenKind::RParen, "')'");
        expect(TokenKind::Dot, "'.'");
        prog.decls.abducibles.push_back(std::move(d));
    }

    // disjunction := conjunction (';' conjunction)*
    Formula formula(bool head) {
        SourceSpan sp = here();
        std::vector<Formula> alts;
        push_flat(alts, conjunction(head), Formula::Kind::Or);
        while (accept(TokenKind::Semicolon)) push_flat(alts, conjunction(head), Formula::Kind::Or);
        if (alts.size() == 1) return std::move(alts.front());
        return Formula::disj(std::move(alts), sp);
    }

    Formula conjunction(bool head) {
        SourceSpan sp = here();
        std::vector<Formula> parts;
        push_flat(parts, unit(head), Formula::Kind::And);
        while (accept(TokenKind::Comma)) push_flat(parts, unit(head), Formula::Kind::And);
        if (parts.size() == 1) return std::move(parts.front());
        return Formula::conj(std::move(parts), sp);
    }

    static void push_flat(std::vector<Formula>& out, Formula f, Formula::Kind kind) {
        // `true` inside a conjunction and `false` inside a disjunction are neutral.
        if (f.kind == kind && !f.children.empty()) {
            for (auto& c : f.children) out.push_back(std::move(c));
        }
        else if (f.kind == kind && f.children.empty()) {
            return;
        }
        else {
            out.push_back(std::move(f));
        }
    }

    Formula unit(bool head) {
        SourceSpan sp = here();
        if (accept(TokenKind::KwTrue)) return Formula::truth();
        if (accept(TokenKind::KwFalse)) return Formula::falsity();
        if (accept(TokenKind::KwNot)) {
            Formula inner = unit(head);
            return negate(std::move(inner), sp);
        }
        if (peek(TokenKind::LParen)) {
            ++pos_;
            Formula f = formula(head);
            expect(TokenKind::RParen, "')'");
            return f;
        }
        return Formula::lit(literal(sp));
    }

    Formula negate(Formula f, const SourceSpan& sp) {
        if (f.kind == Formula::Kind::Lit) {
            Literal& l = f.literal;
            switch (l.kind) {
            case Literal::Kind::Positive: return Formula::lit(Literal::neg(std::move(l.atom)));
            case Literal::Kind::Negative: fail_at(sp, "double negation is not supported");
            case Literal::Kind::Builtin: {
                auto c = complement(l.builtin.op);
                if (!c) fail_at(sp, "'in' cannot be negated");
                l.builtin.op = *c;
                l.span = sp;
                return f;
            }
            }
        }
        Formula n{Formula::Kind::Not, {}, {}, sp};
        n.children.push_back(std::move(f));
        return n;
    }

    Literal literal(const SourceSpan& sp) {
        if (peek(TokenKind::Ident) && !comparison_follows(1)) {
            Atom a = atom(true);
            if (at_comparison()) fail("atom cannot be compared");
            return Literal::pos(std::move(a));
        }
        Term lhs = expr();
        if (accept(TokenKind::KwIn)) {
            Term lo = expr();
            expect(TokenKind::DotDot, "'..'");
            Term hi = expr();
            return Literal::cmp(Builtin{CompareOp::In, std::move(lhs), std::move(lo), std::move(hi)}, sp);
        }
        if (!at_comparison()) {
            if (at_end()) fail("unterminated clause: expected comparison operator");
            fail("expected comparison operator, found " + describe(cur()));
        }
        CompareOp op = comparison();
        Term rhs = expr();
        return Literal::cmp(Builtin{op, std::move(lhs), std::move(rhs), std::nullopt}, sp);
    }

    bool comparison_follows(std::size_t ahead) const {
        if (pos_ + ahead >= toks_.size()) return false;
        switch (toks_[pos_ + ahead].kind) {
        case TokenKind::Eq: case TokenKind::Neq: case TokenKind::Lt: case TokenKind::Gt:
        case TokenKind::Le: case TokenKind::Ge: case TokenKind::KwIs: case TokenKind::KwIn:
        case TokenKind::Plus: case TokenKind::Minus: case TokenKind::Star:
            return true;
        default:
            return false;
        }
    }
    bool at_comparison() const {
        if (at_end()) return false;
        switch (cur().kind) {
        case TokenKind::Eq: case TokenKind::Neq: case TokenKind::Lt: case TokenKind::Gt:
        case TokenKind::Le: case TokenKind::Ge: case TokenKind::KwIs:
            return true;
        default:
            return false;
        }
    }
    CompareOp comparison() {
        TokenKind k = toks_[pos_++].kind;
        switch (k) {
        case TokenKind::Eq: case TokenKind::KwIs: return CompareOp::Eq;
        case TokenKind::Neq: return CompareOp::Neq;
        case TokenKind::Lt: return CompareOp::Lt;
        case TokenKind::Gt: return CompareOp::Gt;
        case TokenKind::Le: return CompareOp::Le;
        default: return CompareOp::Ge;
        }
    }

    Atom atom(bool allowArith) {
        const Token& name = expect(TokenKind::Ident, "predicate name");
        Atom a{name.text, {}, name.span};
        if (accept(TokenKind::LParen)) {
            do {
                a.args.push_back(expr());
            } while (accept(TokenKind::Comma));
            expect(TokenKind::RParen, "')'");
        }
        if (!allowArith) {
            for (const auto& t : a.args)
                if (t.is_arith()) fail_at(name.span, "arithmetic is not allowed here");
        }
        return a;
    }

    // expr := product (('+'|'-') product)*
    Term expr() {
        Term t = product();
        for (;;) {
            if (accept(TokenKind::Plus)) t = Term::arith(ArithOp::Add, {std::move(t), product()});
            else if (accept(TokenKind::Minus)) t = Term::arith(ArithOp::Sub, {std::move(t), product()});
            else return t;
        }
    }

    Term product() {
        Term t = primary();
        while (accept(TokenKind::Star)) t = Term::arith(ArithOp::Mul, {std::move(t), primary()});
        return t;
    }

    Term primary() {
        if (at_end()) fail("unterminated clause: expected term before end of input");
        const Token& t = cur();
        switch (t.kind) {
        case TokenKind::Int: ++pos_; return Term::integer(t.value);
        case TokenKind::Var: ++pos_; return Term::var(t.text);
        case TokenKind::Ident:
            ++pos_;
            if (peek(TokenKind::LParen)) fail_at(t.span, "function symbol '" + t.text + "' in term position");
            return Term::sym(t.text);
        case TokenKind::KwAbs: {
            ++pos_;
            expect(TokenKind::LParen, "'('");
            Term e = expr();
            expect(TokenKind::RParen, "')'");
            return Term::arith(ArithOp::Abs, {std::move(e)});
        }
        case TokenKind::LParen: {
            ++pos_;
            Term e = expr();
            expect(TokenKind::RParen, "')'");
            return e;
        }
        case TokenKind::Minus: {
            ++pos_;
            if (peek(TokenKind::Int)) return Term::integer(-toks_[pos_++].value);
            return Term::arith(ArithOp::Sub, {Term::integer(0), primary()});
        }
        default:
            fail("expected term, found " + describe(t));
        }
    }

    // Uses of a declared abducible must match its declared arity.
    static void check_arities(ParseResult& res) {
        const auto& decls = res.program.decls.abducibles;
        if (decls.empty()) return;
        auto check_atom = [&](const Atom& a) {
            bool nameMatch = false;
            for (const auto& d : decls) {
                if (d.predicate != a.predicate) continue;
                if (d.arity == a.arity()) return;
                nameMatch = true;
            }
            if (nameMatch)
                res.diagnostics.push_back({a.span, "arity mismatch: '" + a.predicate + "' used with " +
                                                       std::to_string(a.arity()) + " arguments but declared abducible with a different arity"});
        };
        auto walk = [&](auto& self, const Formula& f) -> void {
            if (f.kind == Formula::Kind::Lit) {
                if (f.literal.kind != Literal::Kind::Builtin) check_atom(f.literal.atom);
                return;
            }
            for (const auto& c : f.children) self(self, c);
        };
        for (const auto& c : res.program.definitions) {
            check_atom(c.head);
            walk(walk, c.body);
        }
        for (const auto& c : res.program.constraints) {
            walk(walk, c.head);
            walk(walk, c.body);
        }
    }
};

} // namespace

ParseResult parse_program(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ParseResult parse_text(std::string_view text, std::string file) {
    auto toks = tokenize(text, std::move(file));
    ParseResult res = parse_program(toks.tokens);
    res.diagnostics.insert(res.diagnostics.begin(), toks.diagnostics.begin(), toks.diagnostics.end());
    return res;
}

SourceProgram parse_or_throw(std::string_view text, std::string file) {
    ParseResult res = parse_text(text, std::move(file));
    if (!res.ok()) throw Error(res.diagnostics.front().message, res.diagnostics.front().span);
    return std::move(res.program);
}

std::vector<Atom> parse_query(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    if (body.substr(0, 2) == "?-") body.remove_prefix(2);
    auto toks = tokenize(body, "<query>");
    if (!toks.ok()) throw Error(toks.diagnostics.front().message, toks.diagnostics.front().span);
    try {
        return Parser(toks.tokens).query();
    }
    catch (const SyntaxError& e) {
        throw Error(e.message, e.span);
    }
}

} // namespace alp
