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

#include <sstream>

namespace alp {
namespace {

int precedence(const Term& t) {
    if (auto* e = std::get_if<ArithExpr>(&t.node)) {
        switch (e->op) {
        case ArithOp::Add:
        case ArithOp::Sub: return 1;
        case ArithOp::Mul: return 2;
        case ArithOp::Abs: return 3;
        }
    }
    return 3;
}

bool negative_int(const Term& t) {
    auto* i = std::get_if<IntConst>(&t.node);
    return i && i->value < 0;
}

void print_term(std::ostream& out, const Term& t) {
    std::visit([&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) out << n.name;
        else if constexpr (std::is_same_v<T, IntConst>) out << n.value;
        else if constexpr (std::is_same_v<T, SymConst>) out << n.name;
        else {
            if (n.op == ArithOp::Abs) {
                out << "abs(";
                print_term(out, n.args.at(0));
                out << ')';
                return;
            }
            int p = precedence(t);
            const Term& l = n.args.at(0);
            const Term& r = n.args.at(1);
            bool lp = precedence(l) < p;
            bool rp = precedence(r) <= p || negative_int(r);
            if (lp) out << '(';
            print_term(out, l);
            if (lp) out << ')';
            out << (n.op == ArithOp::Add ? '+' : n.op == ArithOp::Sub ? '-' : '*');
            if (rp) out << '(';
            print_term(out, r);
            if (rp) out << ')';
        }
    }, t.node);
}

void print_atom(std::ostream& out, const Atom& a) {
    out << a.predicate;
    if (a.args.empty()) return;
    out << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out << ',';
        print_term(out, a.args[i]);
    }
    out << ')';
}

void print_literal(std::ostream& out, const Literal& l) {
    switch (l.kind) {
    case Literal::Kind::Positive: print_atom(out, l.atom); break;
    case Literal::Kind::Negative: out << "not "; print_atom(out, l.atom); break;
    case Literal::Kind::Builtin:
        print_term(out, l.builtin.lhs);
        out << ' ' << to_string(l.builtin.op) << ' ';
        print_term(out, l.builtin.rhs);
        if (l.builtin.hi) {
            out << "..";
            print_term(out, *l.builtin.hi);
        }
        break;
    }
}

void print_formula(std::ostream& out, const Formula& f, bool nested) {
    switch (f.kind) {
    case Formula::Kind::Lit: print_literal(out, f.literal); return;
    case Formula::Kind::Not:
        out << "not (";
        print_formula(out, f.children.at(0), false);
        out << ')';
        return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        bool isAnd = f.kind == Formula::Kind::And;
        if (f.children.empty()) {
            out << (isAnd ? "true" : "false");
            return;
        }
        if (nested && f.children.size() > 1) out << '(';
        for (std::size_t i = 0; i < f.children.size(); ++i) {
            if (i) out << (isAnd ? ", " : " ; ");
            print_formula(out, f.children[i], f.children[i].kind != Formula::Kind::Lit);
        }
        if (nested && f.children.size() > 1) out << ')';
        return;
    }
    }
}

template <class T>
std::string render(const T& x, void (*fn)(std::ostream&, const T&)) {
    std::ostringstream s;
    fn(s, x);
    return s.str();
}

} // namespace

std::string to_string(const Term& t) { return render(t, print_term); }
std::string to_string(const Atom& a) { return render(a, print_atom); }
std::string to_string(const Literal& l) { return render(l, print_literal); }

std::string to_string(const Clause& c) {
    std::ostringstream s;
    print_atom(s, c.head);
    if (!c.body.empty()) {
        s << " :- ";
        for (std::size_t i = 0; i < c.body.size(); ++i) {
            if (i) s << ", ";
            print_literal(s, c.body[i]);
        }
    }
    s << '.';
    return s.str();
}

std::string to_string(const Constraint& c) {
    std::ostringstream s;
    if (c.heads.empty()) s << "false";
    for (std::size_t i = 0; i < c.heads.size(); ++i) {
        if (i) s << " ; ";
        print_literal(s, c.heads[i]);
    }
    s << " <- ";
    if (c.body.empty()) s << "true";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
        if (i) s << ", ";
        print_literal(s, c.body[i]);
    }
    s << '.';
    return s.str();
}

std::string pretty_print(const SourceProgram& program) {
    std::ostringstream out;
    const auto& d = program.decls;
    for (const auto& a : d.abducibles) {
        out << "abducible " << a.predicate;
        if (a.arg_types.empty()) out << '/' << a.arity;
        else {
            out << '(';
            for (std::size_t i = 0; i < a.arg_types.size(); ++i) out << (i ? "," : "") << a.arg_types[i];
            out << ')';
        }
        out << ".\n";
    }
    for (const auto& c : d.constants) out << "constant " << c.name << " == " << to_string(c.value) << ".\n";
    for (const auto& dom : d.domains)
        out << "domain " << dom.name << " == " << to_string(dom.lo) << ".." << to_string(dom.hi) << ".\n";
    if (!program.definitions.empty()) out << '\n';
    for (const auto& c : program.definitions) {
        print_atom(out, c.head);
        bool fact = c.body.kind == Formula::Kind::And && c.body.children.empty();
        if (!fact) {
            out << " :- ";
            print_formula(out, c.body, false);
        }
        out << ".\n";
    }
    if (!program.constraints.empty()) out << '\n';
    for (const auto& c : program.constraints) {
        // A top-level conjunctive head keeps its parentheses: `(a, b) <- body.`
        print_formula(out, c.head, c.head.kind == Formula::Kind::And);
        out << " <- ";
        print_formula(out, c.body, false);
        out << ".\n";
    }
    return out.str();
}

std::string pretty_print(const Program& program) { return pretty_print(to_source(program)); }

} // namespace alp
