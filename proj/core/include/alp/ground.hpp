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

#include <alp/atoms.hpp>
#include <alp/model.hpp>
#include <alp/normalize.hpp>

#include <map>
#include <string>
#include <vector>

namespace alp {

/// Evaluated declarations.
struct DomainTable {
    std::map<std::string, std::vector<Value>> domains;
    std::map<std::string, std::int64_t> constants;

    const std::vector<Value>* domain(const std::string& name) const;
    const std::int64_t* constant(const std::string& name) const;
};

using ConstantOverrides = std::map<std::string, std::int64_t>;

/// Evaluates constants (overrides replace the declared expression) and
/// expands every domain range.
DomainTable eval_declarations(const Declarations& decls, const ConstantOverrides& overrides = {});

using Binding = std::map<std::string, Value>;

struct BuiltinResult {
    enum class Kind : std::uint8_t { True, False, Bindings };
    Kind kind = Kind::False;
    std::vector<Binding> bindings; // Bindings: each extends the input binding
};

/// Evaluates a comparison under `binding`. The left operand of `in`, and of
/// `=` when the right side is ground, may be an unbound variable; these modes
/// enumerate the extending bindings. Any other unbound variable throws
/// "insufficiently instantiated".
BuiltinResult eval_builtin(const Builtin& lit, const Binding& binding, const DomainTable* table = nullptr);

struct GroundLiteral {
    AtomId atom{};
    bool positive = true;
    friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
};

/// Ground instance of a normalized constraint; heads form a disjunction
/// (empty: a denial), pos/neg a conjunction.
struct GroundConstraint {
    std::vector<GroundLiteral> heads;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    std::uint32_t origin = 0; // index into GroundTheory::sources
    friend bool operator==(const GroundConstraint&, const GroundConstraint&) = default;
};

/// Ground clauses of the definitions that do not depend on any abducible,
/// together with their well-founded model.
struct BaseFragment {
    AtomTable atoms;
    std::vector<GroundClause> clauses;
    Interpretation model;
    AtomSet possible;
    std::vector<PredicateKey> predicates;
};

struct GroundTheory {
    AtomTable atoms;
    std::vector<GroundClause> clauses;
    std::vector<GroundConstraint> constraints;
    std::vector<AtomId> universe; // abducible candidates, sorted by AtomTable::less
    std::vector<AtomId> forced;   // abducibles required by `a <- true`, sorted
    std::vector<Constraint> sources; // normalized constraints, for diagnostics
    bool stratified = true;       // no negative edge inside an atom-dependency cycle

    std::size_t num_atoms() const { return atoms.size(); }
    /// Sorted union of universe and forced.
    std::vector<AtomId> candidates() const;
    std::string str(const GroundConstraint& c) const;
    std::string str(const GroundClause& c) const;
};

BaseFragment ground_base(const Program& program, const DomainTable& domains);

/// Candidate abducible atoms: per argument, the declared domain or else the
/// base-model extension of the unary predicates in typing constraints
/// `d(Xi) <- p(X1,...,Xn)`; the universe is their cross product.
std::vector<AtomId> abducible_universe(const Program& program, const DomainTable& domains, BaseFragment& base);

/// Full instantiation: abducible body literals range over universe and forced
/// atoms; builtins and base-fragment literals are evaluated away.
GroundTheory ground(const Program& program, const DomainTable& domains, BaseFragment base,
                    std::vector<AtomId> universe);

/// classify, eval_declarations, ground_base, abducible_universe, ground.
GroundTheory ground_program(const Program& program, const ConstantOverrides& overrides = {});

/// Deterministic text dump, one ground rule per line.
std::string dump(const GroundTheory& theory);

} // namespace alp
