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

#include <map>
#include <string>

namespace alp {

/// Distributes body disjunctions into separate clauses/constraints and splits
/// conjunctive constraint heads. Rejects compound formulas under `not`.
Program normalize(const SourceProgram& program);

enum class PredicateKind : std::uint8_t { Abducible, Defined, Builtin };

struct PredicateKey {
    std::string name;
    std::uint32_t arity = 0;

    std::string str() const { return name + "/" + std::to_string(arity); }
    friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;
};

using Classification = std::map<PredicateKey, PredicateKind>;

/// Total classification of every predicate occurring in the program. Declared
/// domains count as defined unary predicates. Comparison operators are
/// reported as binary builtins.
Classification classify_predicates(const Program& program);

} // namespace alp
