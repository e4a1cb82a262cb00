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

#include <alp/model.hpp>

#include <functional>

namespace alp {

std::string SourceSpan::str() const {
    return (file.empty() ? std::string("<input>") : file) + ":" + std::to_string(line) + ":" + std::to_string(column);
}

Error::Error(const std::string& msg, std::optional<SourceSpan> where)
    : std::runtime_error(where && where->valid() ? where->str() + ": " + msg : msg)
    , where_(std::move(where))
    , message_(msg) {}

std::string Value::str() const { return is_int() ? std::to_string(as_int()) : as_symbol(); }

std::size_t Value::hash() const {
    return is_int() ? std::hash<std::int64_t>{}(as_int()) : std::hash<std::string>{}(as_symbol()) ^ 0x9e3779b97f4a7c15ull;
}

bool operator==(const ArithExpr& a, const ArithExpr& b) { return a.op == b.op && a.args == b.args; }

bool Term::ground() const {
    if (is_var()) return false;
    if (auto* e = std::get_if<ArithExpr>(&node)) {
        for (const auto& t : e->args)
            if (!t.ground()) return false;
    }
    return true;
}

void Term::collect_vars(std::vector<std::string>& out) const {
    if (auto* v = as_var()) {
        for (const auto& n : out)
            if (n == v->name) return;
        out.push_back(v->name);
    }
    else if (auto* e = std::get_if<ArithExpr>(&node)) {
        for (const auto& t : e->args) t.collect_vars(out);
    }
}

bool Atom::ground() const {
    for (const auto& t : args)
        if (!t.ground()) return false;
    return true;
}

void Literal::collect_vars(std::vector<std::string>& out) const {
    if (kind == Kind::Builtin) {
        builtin.lhs.collect_vars(out);
        builtin.rhs.collect_vars(out);
        if (builtin.hi) builtin.hi->collect_vars(out);
    }
    else {
        for (const auto& t : atom.args) t.collect_vars(out);
    }
}

const char* to_string(CompareOp op) {
    switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Neq: return "\\=";
    case CompareOp::Lt: return "<";
    case CompareOp::Gt: return ">";
    case CompareOp::Le: return "=<";
    case CompareOp::Ge: return ">=";
    case CompareOp::In: return "in";
    }
    return "?";
}

std::optional<CompareOp> complement(CompareOp op) {
    switch (op) {
    case CompareOp::Eq: return CompareOp::Neq;
    case CompareOp::Neq: return CompareOp::Eq;
    case CompareOp::Lt: return CompareOp::Ge;
    case CompareOp::Ge: return CompareOp::Lt;
    case CompareOp::Gt: return CompareOp::Le;
    case CompareOp::Le: return CompareOp::Gt;
    case CompareOp::In: return std::nullopt;
    }
    return std::nullopt;
}

const AbducibleDecl* Declarations::find_abducible(const std::string& pred, std::uint32_t arity) const {
    for (const auto& d : abducibles)
        if (d.predicate == pred && d.arity == arity) return &d;
    return nullptr;
}

const DomainDecl* Declarations::find_domain(const std::string& name) const {
    for (const auto& d : domains)
        if (d.name == name) return &d;
    return nullptr;
}

SourceProgram to_source(const Program& p) {
    auto conj = [](const std::vector<Literal>& lits) {
        std::vector<Formula> fs;
        for (const auto& l : lits) fs.push_back(Formula::lit(l));
        return Formula::conj(std::move(fs));
    };
    SourceProgram out;
    out.decls = p.decls;
    for (const auto& c : p.definitions) out.definitions.push_back({c.head, conj(c.body), c.span});
    for (const auto& c : p.constraints) {
        std::vector<Formula> hs;
        for (const auto& h : c.heads) hs.push_back(Formula::lit(h));
        out.constraints.push_back({Formula::disj(std::move(hs)), conj(c.body), c.span});
    }
    return out;
}

} // namespace alp
