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

#include <alp/error.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace alp {

/// A domain value: an integer or a symbolic constant such as `table`.
/// Integers order before symbols; symbols order lexicographically.
class Value {
public:
    Value() : v_(std::int64_t{0}) {}
    Value(std::int64_t i) : v_(i) {}
    Value(int i) : v_(std::int64_t{i}) {}
    explicit Value(std::string sym) : v_(std::move(sym)) {}
    static Value symbol(std::string s) { return Value(std::move(s)); }

    bool is_int() const { return v_.index() == 0; }
    bool is_symbol() const { return v_.index() == 1; }
    std::int64_t as_int() const { return std::get<0>(v_); }
    const std::string& as_symbol() const { return std::get<1>(v_); }

    std::string str() const;
    std::size_t hash() const;

    friend bool operator==(const Value&, const Value&) = default;
    friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
        if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
        if (a.is_int()) return a.as_int() <=> b.as_int();
        return a.as_symbol().compare(b.as_symbol()) <=> 0;
    }

private:
    std::variant<std::int64_t, std::string> v_;
};

struct Term;

struct Variable {
    std::string name;
    friend bool operator==(const Variable&, const Variable&) = default;
};

struct IntConst {
    std::int64_t value = 0;
    friend bool operator==(const IntConst&, const IntConst&) = default;
};

/// Lowercase identifier in term position. Names of declared constants are
/// replaced by their value during grounding.
struct SymConst {
    std::string name;
    friend bool operator==(const SymConst&, const SymConst&) = default;
};

enum class ArithOp : std::uint8_t { Add, Sub, Mul, Abs };

struct ArithExpr {
    ArithOp op = ArithOp::Add;
    std::vector<Term> args; // two operands, one for Abs
    friend bool operator==(const ArithExpr&, const ArithExpr&);
};

struct Term {
    std::variant<Variable, IntConst, SymConst, ArithExpr> node;

    static Term var(std::string name) { return Term{Variable{std::move(name)}}; }
    static Term integer(std::int64_t v) { return Term{IntConst{v}}; }
    static Term sym(std::string name) { return Term{SymConst{std::move(name)}}; }
    static Term arith(ArithOp op, std::vector<Term> args) { return Term{ArithExpr{op, std::move(args)}}; }

    bool is_var() const { return std::holds_alternative<Variable>(node); }
    bool is_arith() const { return std::holds_alternative<ArithExpr>(node); }
    const Variable* as_var() const { return std::get_if<Variable>(&node); }
    bool ground() const;
    void collect_vars(std::vector<std::string>& out) const;

    friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;
    SourceSpan span;

    std::uint32_t arity() const { return static_cast<std::uint32_t>(args.size()); }
    bool ground() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

enum class CompareOp : std::uint8_t { Eq, Neq, Lt, Gt, Le, Ge, In };

const char* to_string(CompareOp op);
/// Operator of the negated comparison. `In` has no complement.
std::optional<CompareOp> complement(CompareOp op);

/// Comparison literal. For `In` the right side is the range `rhs..hi`.
struct Builtin {
    CompareOp op = CompareOp::Eq;
    Term lhs;
    Term rhs;
    std::optional<Term> hi;
    friend bool operator==(const Builtin&, const Builtin&) = default;
};

struct Literal {
    enum class Kind : std::uint8_t { Positive, Negative, Builtin };

    Kind kind = Kind::Positive;
    Atom atom;            // Positive, Negative
    alp::Builtin builtin; // Builtin
    SourceSpan span;

    static Literal pos(Atom a) { auto s = a.span; return Literal{Kind::Positive, std::move(a), {}, s}; }
    static Literal neg(Atom a) { auto s = a.span; return Literal{Kind::Negative, std::move(a), {}, s}; }
    static Literal cmp(alp::Builtin b, SourceSpan s = {}) { return Literal{Kind::Builtin, {}, std::move(b), std::move(s)}; }

    bool is_builtin() const { return kind == Kind::Builtin; }
    void collect_vars(std::vector<std::string>& out) const;
    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Definition clause `head :- body`, body a conjunction.
struct Clause {
    Atom head;
    std::vector<Literal> body;
    SourceSpan span;
    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Integrity constraint `heads <- body`: heads is a disjunction (empty means
/// `false`), body a conjunction (empty means `true`).
struct Constraint {
    std::vector<Literal> heads;
    std::vector<Literal> body;
    SourceSpan span;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct AbducibleDecl {
    std::string predicate;
    std::uint32_t arity = 0;
    std::vector<std::string> arg_types; // empty, or one domain name per argument
    SourceSpan span;
    friend bool operator==(const AbducibleDecl&, const AbducibleDecl&) = default;
};

struct ConstantDecl {
    std::string name;
    Term value;
    SourceSpan span;
    friend bool operator==(const ConstantDecl&, const ConstantDecl&) = default;
};

struct DomainDecl {
    std::string name;
    Term lo;
    Term hi;
    SourceSpan span;
    friend bool operator==(const DomainDecl&, const DomainDecl&) = default;
};

struct Declarations {
    std::vector<AbducibleDecl> abducibles;
    std::vector<ConstantDecl> constants;
    std::vector<DomainDecl> domains;

    const AbducibleDecl* find_abducible(const std::string& pred, std::uint32_t arity) const;
    const DomainDecl* find_domain(const std::string& name) const;
    friend bool operator==(const Declarations&, const Declarations&) = default;
};

/// Normalized program: conjunctive bodies, disjunctive constraint heads.
struct Program {
    Declarations decls;
    std::vector<Clause> definitions;
    std::vector<Constraint> constraints;
    friend bool operator==(const Program&, const Program&) = default;
};

/// Body or head formula as written, before normalization.
struct Formula {
    enum class Kind : std::uint8_t { Lit, And, Or, Not };

    Kind kind = Kind::And;
    Literal literal;               // Lit
    std::vector<Formula> children; // And, Or: operands; Not: exactly one
    SourceSpan span;

    static Formula lit(Literal l) { auto s = l.span; return Formula{Kind::Lit, std::move(l), {}, s}; }
    static Formula conj(std::vector<Formula> c, SourceSpan s = {}) { return Formula{Kind::And, {}, std::move(c), s}; }
    static Formula disj(std::vector<Formula> c, SourceSpan s = {}) { return Formula{Kind::Or, {}, std::move(c), s}; }
    static Formula truth() { return conj({}); }
    static Formula falsity() { return disj({}); }

    friend bool operator==(const Formula&, const Formula&) = default;
};

struct SourceClause {
    Atom head;
    Formula body; // empty And for facts
    SourceSpan span;
    friend bool operator==(const SourceClause&, const SourceClause&) = default;
};

struct SourceConstraint {
    Formula head; // empty Or is `false`
    Formula body; // empty And is `true`
    SourceSpan span;
    friend bool operator==(const SourceConstraint&, const SourceConstraint&) = default;
};

/// Parser output: program with body disjunctions and conjunctive heads intact.
struct SourceProgram {
    Declarations decls;
    std::vector<SourceClause> definitions;
    std::vector<SourceConstraint> constraints;
    friend bool operator==(const SourceProgram&, const SourceProgram&) = default;
};

/// The sugar-free view of a normalized program.
SourceProgram to_source(const Program& p);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Constraint& c);

} // namespace alp
