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

#include <span>
#include <utility>
#include <vector>

namespace alp {

/// Sizes of the two estimates after each round of the alternating fixpoint.
struct FixpointTrace {
    std::size_t iterations = 0;
    std::vector<std::size_t> under; // definitely-true atoms
    std::vector<std::size_t> over;  // possibly-true atoms
};

/// Least model of a definite program together with `facts`.
/// Precondition: no clause has negative body literals.
AtomSet least_model(std::size_t atoms, std::span<const GroundClause> clauses, std::span<const AtomId> facts);

/// Precomputed index over one ground program for repeated evaluation with
/// different fact sets. The program is borrowed and must outlive the evaluator.
class WellFoundedEvaluator {
public:
    WellFoundedEvaluator(std::size_t atoms, std::span<const GroundClause> clauses);

    /// Least model of the program where `not a` holds iff `a` is not in
    /// `assumed`. With `assumed == nullptr` negative literals are ignored.
    AtomSet reduct_model(std::span<const AtomId> facts, const AtomSet* assumed) const;

    std::pair<Interpretation, FixpointTrace> evaluate(std::span<const AtomId> facts) const;

    std::size_t atoms() const { return atoms_; }

private:
    std::size_t atoms_;
    std::span<const GroundClause> clauses_;
    std::vector<std::uint32_t> occ_begin_; // positive body occurrences, CSR layout
    std::vector<std::uint32_t> occ_;
    std::vector<std::uint32_t> unit_clauses_; // clauses with empty positive body
};

/// Well-founded model via the alternating fixpoint. `facts` are added as
/// unconditional clauses (the abduced atoms).
std::pair<Interpretation, FixpointTrace> well_founded(std::size_t atoms, std::span<const GroundClause> clauses,
                                                       std::span<const AtomId> facts);

struct TwoValuedness {
    bool two_valued = true;
    std::vector<AtomId> undefined; // ascending ids
};

TwoValuedness is_two_valued(const Interpretation& model);

} // namespace alp
