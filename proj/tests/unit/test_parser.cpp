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

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace alp;

namespace {

std::vector<TokenKind> kinds(std::string_view text) {
    auto r = tokenize(text);
    REQUIRE(r.ok());
    std::vector<TokenKind> out;
    for (const auto& t : r.tokens) out.push_back(t.kind);
    return out;
}

const Formula& only_lit(const Formula& f) {
    REQUIRE(f.kind == Formula::Kind::Lit);
    return f;
}

} // namespace

TEST_CASE("tokenize declarations", "[parser][tokenize]") {
    using K = TokenKind;
    CHECK(kinds("abducible position/2.") == std::vector<K>{K::KwAbducible, K::Ident, K::Slash, K::Int, K::Dot});
    auto ks = kinds("row(R) :- size(N), R in 1..N.");
    CHECK(std::count(ks.begin(), ks.end(), K::KwIn) == 1);
    CHECK(std::count(ks.begin(), ks.end(), K::DotDot) == 1);
    CHECK(kinds("").empty());
    CHECK(kinds("% only a comment\n   \t\n").empty());
}

TEST_CASE("tokenize punctuation prefers the longest match", "[parser][tokenize]") {
    using K = TokenKind;
    CHECK(kinds(":- <- == .. \\= =< >= = < > + - * ( ) , ; /") ==
          std::vector<K>{K::If, K::Arrow, K::DoubleEq, K::DotDot, K::Neq, K::Le, K::Ge, K::Eq, K::Lt, K::Gt,
                         K::Plus, K::Minus, K::Star, K::LParen, K::RParen, K::Comma, K::Semicolon, K::Slash});
    CHECK(kinds("X<Y") == std::vector<K>{K::Var, K::Lt, K::Var});
    CHECK(kinds("_x Abc abc 42") == std::vector<K>{K::Var, K::Var, K::Ident, K::Int});
}

TEST_CASE("tokenize reports illegal characters with positions and continues", "[parser][tokenize]") {
    auto r = tokenize("p(a).\nq(#).\n@", "f.alp");
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].span.line == 2);
    CHECK(r.diagnostics[0].span.column == 3);
    CHECK(r.diagnostics[0].str().rfind("f.alp:2:3:", 0) == 0);
    CHECK(r.diagnostics[1].span.line == 3);
    CHECK(r.tokens.size() >= 9);
}

TEST_CASE("tokenize detects integer overflow", "[parser][tokenize]") {
    auto r = tokenize("p(99999999999999999999).");
    CHECK_FALSE(r.ok());
}

TEST_CASE("tokenizer is total on arbitrary bytes", "[parser][tokenize]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 300; ++i) {
        std::string s(static_cast<std::size_t>(i % 64), '\0');
        for (auto& c : s) c = static_cast<char>(byte(rng));
        auto r = tokenize(s);
        for (const auto& d : r.diagnostics) {
            CHECK(d.span.line >= 1);
            CHECK(d.span.offset <= s.size());
        }
        auto p = parse_text(s);
        for (const auto& d : p.diagnostics) CHECK(d.span.offset <= s.size());
    }
}

TEST_CASE("abducible declaration forms", "[parser]") {
    auto a = parse_or_throw("abducible position/2. abducible(move/3). abducible pick(row, column).");
    REQUIRE(a.decls.abducibles.size() == 3);
    CHECK(a.decls.abducibles[0].predicate == "position");
    CHECK(a.decls.abducibles[0].arity == 2);
    CHECK(a.decls.abducibles[1].predicate == "move");
    CHECK(a.decls.abducibles[1].arity == 3);
    CHECK(a.decls.abducibles[2].arg_types == std::vector<std::string>{"row", "column"});
}

TEST_CASE("constant and domain declarations", "[parser]") {
    auto p = parse_or_throw("constant size == 8. domain row == 1..size.");
    REQUIRE(p.decls.constants.size() == 1);
    CHECK(p.decls.constants[0].value == Term::integer(8));
    REQUIRE(p.decls.domains.size() == 1);
    CHECK(p.decls.domains[0].hi == Term::sym("size"));
}

TEST_CASE("definitions, facts and constraints", "[parser]") {
    auto p = parse_or_throw("size(8). row(R) :- size(N), R in 1..N. false <- p(X). q(X) <- true.");
    REQUIRE(p.definitions.size() == 2);
    CHECK(p.definitions[0].body == Formula::truth());
    REQUIRE(p.constraints.size() == 2);
    CHECK(p.constraints[0].head == Formula::falsity());
    CHECK(p.constraints[1].body == Formula::truth());
}

TEST_CASE("head arithmetic is kept as an expression", "[parser]") {
    auto p = parse_or_throw("on(B,L,T+1) :- move(B,L,T).");
    REQUIRE(p.definitions.size() == 1);
    const Term& t = p.definitions[0].head.args[2];
    REQUIRE(t.is_arith());
    CHECK(t == Term::arith(ArithOp::Add, {Term::var("T"), Term::integer(1)}));
}

TEST_CASE("arithmetic precedence and comparisons", "[parser]") {
    auto p = parse_or_throw("t(T0) :- s(T1), T0=T1-1. u(X) :- s(X), X*2+1 > abs(X-3).");
    const Formula& b = p.definitions[0].body;
    REQUIRE(b.kind == Formula::Kind::And);
    const Literal& eq = only_lit(b.children[1]).literal;
    REQUIRE(eq.is_builtin());
    CHECK(eq.builtin.op == CompareOp::Eq);
    CHECK(eq.builtin.lhs == Term::var("T0"));
    CHECK(eq.builtin.rhs == Term::arith(ArithOp::Sub, {Term::var("T1"), Term::integer(1)}));

    const Literal& gt = only_lit(p.definitions[1].body.children[1]).literal;
    CHECK(gt.builtin.op == CompareOp::Gt);
    CHECK(gt.builtin.lhs ==
          Term::arith(ArithOp::Add, {Term::arith(ArithOp::Mul, {Term::var("X"), Term::integer(2)}), Term::integer(1)}));
    CHECK(gt.builtin.rhs == Term::arith(ArithOp::Abs, {Term::arith(ArithOp::Sub, {Term::var("X"), Term::integer(3)})}));
}

TEST_CASE("comma binds tighter than semicolon", "[parser]") {
    auto p = parse_or_throw("false <- a, b ; c.");
    const Formula& body = p.constraints[0].body;
    REQUIRE(body.kind == Formula::Kind::Or);
    REQUIRE(body.children.size() == 2);
    CHECK(body.children[0].kind == Formula::Kind::And);
    CHECK(body.children[1].kind == Formula::Kind::Lit);
}

TEST_CASE("negated comparisons become the complementary operator", "[parser]") {
    auto p = parse_or_throw("false <- p(X), p(Y), not X = Y.");
    const Literal& l = only_lit(p.constraints[0].body.children[2]).literal;
    CHECK(l.builtin.op == CompareOp::Neq);
    CHECK_FALSE(parse_text("false <- p(X), not X in 1..3.").ok());
}

TEST_CASE("is is read as equality", "[parser]") {
    auto p = parse_or_throw("s(X) :- p(Y), X is Y + 1.");
    CHECK(only_lit(p.definitions[0].body.children[1]).literal.builtin.op == CompareOp::Eq);
}

TEST_CASE("negative integers", "[parser]") {
    auto p = parse_or_throw("c(-2). false <- c(X), X < -3.");
    CHECK(p.definitions[0].head.args[0] == Term::integer(-2));
    CHECK(only_lit(p.constraints[0].body.children[1]).literal.builtin.rhs == Term::integer(-3));
}

TEST_CASE("diagnostics carry positions and parsing continues", "[parser][errors]") {
    auto r = parse_text("p(1).\nq(X) :- p(X)\nr(1).\nfalse <- p(X)), q(X).\ns(2).\n", "bad.alp");
    REQUIRE(r.diagnostics.size() >= 2);
    for (const auto& d : r.diagnostics) CHECK(d.span.file == "bad.alp");
    CHECK(r.diagnostics[0].span.line == 3);
    CHECK(r.diagnostics[1].span.line == 4);
    bool found_s = false;
    for (const auto& c : r.program.definitions) found_s = found_s || c.head.predicate == "s";
    CHECK(found_s);
}

TEST_CASE("unterminated clause", "[parser][errors]") {
    auto r = parse_text("p(1).\nq(X) :- p(X)");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].message.find("unterminated") != std::string::npos);
}

TEST_CASE("arity mismatch between declaration and use", "[parser][errors]") {
    auto r = parse_text("abducible p/2.\nfalse <- p(X).");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].message.find("arity mismatch") != std::string::npos);
    CHECK(r.diagnostics[0].span.line == 2);
}

TEST_CASE("definition heads must be atoms", "[parser][errors]") {
    CHECK_FALSE(parse_text("p(X) ; q(X) :- r(X).").ok());
    CHECK_FALSE(parse_text("not p :- q.").ok());
}

TEST_CASE("verbatim listings", "[parser][examples]") {
    SECTION("queens") {
        auto p = parse_or_throw(test::slurp(test::data_dir() / "queens_verbatim.alp"));
        CHECK(p.decls.abducibles.size() == 1);
        std::set<std::string> defined;
        for (const auto& c : p.definitions) defined.insert(c.head.predicate);
        CHECK(defined == std::set<std::string>{"size", "row", "column", "row_has_queen"});
        CHECK(p.constraints.size() == 5);
        CHECK(normalize(p).constraints.size() == 6);
    }
    SECTION("planning listing as printed has two syntax errors") {
        auto r = parse_text(test::slurp(test::data_dir() / "plan_verbatim.alp"), "plan_verbatim.alp");
        REQUIRE(r.diagnostics.size() == 2);
        CHECK(r.diagnostics[0].span.line == 4);
        CHECK(r.diagnostics[1].span.line == 13);
    }
    SECTION("bundled planning program") {
        auto p = parse_or_throw(test::slurp(test::programs_dir() / "plan.alp"));
        CHECK(p.decls.abducibles.size() == 2);
        std::set<std::string> defined;
        for (const auto& c : p.definitions) defined.insert(c.head.predicate);
        CHECK(defined ==
              std::set<std::string>{"maxtime", "block", "location", "movetime", "on", "terminates_on"});
        CHECK(p.constraints.size() == 22);
    }
}

TEST_CASE("pretty printing canonical forms", "[parser][print]") {
    auto p = parse_or_throw("false <- p(X). q(X) <- true. p(1).");
    std::string text = pretty_print(p);
    CHECK(text.find("false <- p(X).") != std::string::npos);
    CHECK(text.find("q(X) <- true.") != std::string::npos);
    CHECK(text.find("p(1).") != std::string::npos);
}

TEST_CASE("round trip on hand-written edge cases", "[parser][print]") {
    const char* cases[] = {
        "false <- q(X), X < -3.",
        "p(X) :- q(Y), X = 0 - Y.",
        "p(X) :- q(Y), X = -(Y).",
        "p(X) :- q(Y), X = Y - (2 - 1).",
        "p(X) :- q(Y), X = (Y - 2) - 1.",
        "p(X) :- q(Y), X = Y * (2 + 1).",
        "(a, (b ; c)) <- d.",
        "false <- (a ; b), (c ; d, e).",
        "not a ; b <- c.",
        "x :- not y, true.",
        "abducible(q/0). a :- q.",
        "constant k == 2 * 3 - abs(-4). domain d == k..k + 1.",
        "p(table, 3) :- true.",
    };
    for (const char* c : cases) {
        INFO(c);
        auto once = parse_or_throw(c);
        auto twice = parse_or_throw(pretty_print(once));
        CHECK(once == twice);
        CHECK(pretty_print(once) == pretty_print(twice));
    }
}

TEST_CASE("query parsing", "[parser]") {
    auto q = parse_query("?- position(1,C), row(R)");
    REQUIRE(q.size() == 2);
    CHECK(q[0].args[1] == Term::var("C"));
    CHECK(parse_query("p(1).").size() == 1);
    CHECK_THROWS_AS(parse_query("p(1) :- q"), Error);
}
