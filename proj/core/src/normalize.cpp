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

#include <alp/normalize.hpp>

#include <set>

namespace alp {
namespace {

using Conj = std::vector<Literal>;

// Disjunctive normal form: a list of alternative conjunctions.
std::vector<Conj> dnf(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::Lit: return {Conj{f.literal}};
    case Formula::Kind::Not: {
        const Formula& inner = f.children.at(0);
        throw Error(inner.kind == Formula::Kind::Or ? "disjunction under negation is not supported"
                                                    : "only atoms and comparisons can be negated",
                    f.span);
    }
    case Formula::Kind::Or: {
        std::vector<Conj> out;
        for (const auto& c : f.children) {
            auto sub = dnf(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    case Formula::Kind::And: {
        std::vector<Conj> acc{Conj{}};
        for (const auto& c : f.children) {
            auto sub = dnf(c);
            std::vector<Conj> next;
            next.reserve(acc.size() * sub.size());
            for (const auto& a : acc) {
                for (const auto& s : sub) {
                    Conj merged = a;
                    merged.insert(merged.end(), s.begin(), s.end());
                    next.push_back(std::move(merged));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    }
    return {};
}

// Conjunctive normal form of a head: a list of disjunctions, each of which
// becomes a separate constraint.
std::vector<Conj> cnf(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::Lit: return {Conj{f.literal}};
    case Formula::Kind::Not:
        throw Error("only atoms and comparisons can be negated", f.span);
    case Formula::Kind::And: {
        std::vector<Conj> out;
        for (const auto& c : f.children) {
            auto sub = cnf(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    case Formula::Kind::Or: {
        std::vector<Conj> acc{Conj{}};
        for (const auto& c : f.children) {
            auto sub = cnf(c);
            std::vector<Conj> next;
            next.reserve(acc.size() * sub.size());
            for (const auto& a : acc) {
                for (const auto& s : sub) {
                    Conj merged = a;
                    merged.insert(merged.end(), s.begin(), s.end());
                    next.push_back(std::move(merged));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    }
    return {};
}

void check_body_atoms(const Conj& body) {
    for (const auto& l : body) {
        if (l.is_builtin()) continue;
        for (const auto& t : l.atom.args)
            if (t.is_arith()) throw Error("arithmetic is only allowed in heads and comparisons", l.span);
    }
}

} // namespace

Program normalize(const SourceProgram& program) {
    Program out;
    out.decls = program.decls;
    for (const auto& c : program.definitions) {
        for (auto& body : dnf(c.body)) {
            check_body_atoms(body);
            out.definitions.push_back({c.head, std::move(body), c.span});
        }
    }
    for (const auto& c : program.constraints) {
        auto bodies = dnf(c.body);
        auto heads = cnf(c.head);
        for (const auto& body : bodies) {
            check_body_atoms(body);
            for (const auto& h : heads) {
                for (const auto& l : h) {
                    if (l.is_builtin()) continue;
                    for (const auto& t : l.atom.args)
                        if (t.is_arith()) throw Error("arithmetic is not allowed in constraint head atoms", l.span);
                }
                out.constraints.push_back({h, body, c.span});
            }
        }
    }
    return out;
}

Classification classify_predicates(const Program& program) {
    Classification out;
    std::set<PredicateKey> defined;
    for (const auto& c : program.definitions) defined.insert({c.head.predicate, c.head.arity()});

    for (const auto& a : program.decls.abducibles) {
        PredicateKey key{a.predicate, a.arity};
        if (defined.count(key)) throw Error("predicate " + key.str() + " is both abducible and defined", a.span);
        if (!a.arg_types.empty() && a.arg_types.size() != a.arity)
            throw Error("abducible " + key.str() + " declares " + std::to_string(a.arg_types.size()) + " argument domains", a.span);
        out[key] = PredicateKind::Abducible;
    }
    for (const auto& d : program.decls.domains) {
        PredicateKey key{d.name, 1};
        if (defined.count(key)) throw Error("domain " + d.name + " is also defined by clauses", d.span);
        if (out.count(key)) throw Error("domain " + d.name + " clashes with abducible " + key.str(), d.span);
        out[key] = PredicateKind::Defined;
    }
    for (const auto& k : defined) out[k] = PredicateKind::Defined;

    auto visit = [&](const Literal& l) {
        if (l.is_builtin()) {
            out[{to_string(l.builtin.op), 2}] = PredicateKind::Builtin;
            return;
        }
        PredicateKey key{l.atom.predicate, l.atom.arity()};
        if (!out.count(key)) throw Error("undefined predicate " + key.str(), l.atom.span);
    };
    for (const auto& c : program.definitions)
        for (const auto& l : c.body) visit(l);
    for (const auto& c : program.constraints) {
        for (const auto& l : c.heads) visit(l);
        for (const auto& l : c.body) visit(l);
    }
    return out;
}

} // namespace alp
