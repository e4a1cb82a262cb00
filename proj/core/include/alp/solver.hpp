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

#include <alp/ground.hpp>
#include <alp/wfs.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alp {

struct CheckResult {
    enum class Kind : std::uint8_t { Sat, UnsatConstraint, NotTwoValued };

    Kind kind = Kind::Sat;
    std::size_t constraint = 0;    // UnsatConstraint: index into theory.constraints
    std::vector<AtomId> undefined; // NotTwoValued

    bool sat() const { return kind == Kind::Sat; }
};

/// Reference semantics for one candidate. Reuses the index of the theory's
/// definition layer across calls.
class DeltaChecker {
public:
    explicit DeltaChecker(const GroundTheory& theory);

    /// With `require_two_valued == false` undefined atoms are tolerated and a
    /// constraint instance holds iff its head value is at least its body value
    /// in the order false < undefined < true.
    CheckResult check(std::span<const AtomId> delta, bool require_two_valued = true) const;
    Interpretation model(std::span<const AtomId> delta, FixpointTrace* trace = nullptr) const;

private:
    const GroundTheory& theory_;
    WellFoundedEvaluator wfs_;
    AtomSet candidates_;
};

/// Throws if `delta` contains an atom outside universe and forced.
CheckResult check_delta(const GroundTheory& theory, std::span<const AtomId> delta);

enum class BranchOrder : std::uint8_t { LexAsc, LexDesc };

struct SolveOptions {
    std::optional<std::size_t> max_models; // nullopt: all
    bool minimal_only = false;
    bool require_two_valued = true;
    BranchOrder branch_order = BranchOrder::LexAsc;
    bool propagate = true; // false: pure leaf checking
    std::function<void(const std::string&)> trace{};
};

struct SolveStats {
    std::uint64_t nodes = 0;             // decisions
    std::uint64_t constraint_checks = 0; // leaf evaluations
    std::uint64_t pruned = 0;            // branches closed by propagation
    std::uint64_t rejected_leaves = 0;   // leaves failing the reference check
    std::uint64_t propagations = 0;
    std::chrono::duration<double> wall_time{};
};

struct SolveReport {
    std::vector<Delta> solutions; // emission order, each sorted
    SolveStats stats;
    bool complete = false; // search space exhausted
    std::optional<std::size_t> root_conflict; // constraint refuted before any decision
    bool definitions_inconsistent = false;    // no candidate can give a two-valued model
};

/// Enumerates every Delta with forced <= Delta <= universe+forced accepted by
/// the reference check.
SolveReport solve(const GroundTheory& theory, const SolveOptions& opts = {});

/// Keeps the subset-minimal solutions, preserving order.
std::vector<Delta> minimal_solutions(const std::vector<Delta>& solutions);

struct QueryTranslation {
    Program program;
    std::string answer;     // fresh abducible carrying the query variables
    std::string answer_any; // fresh defined predicate, true iff some answer is abduced
};

/// Rewrites `?- Q1,...,Qm` into a fresh abducible answer/k over the query
/// variables, typing constraints for it, the conjunctive-head constraint
/// `(Q1,...,Qm) <- answer(V1,...,Vk)` and a constraint requiring some answer.
QueryTranslation translate_query(const std::vector<Atom>& query, const Program& program);

/// Drops the atoms of the given predicates from each solution and removes the
/// duplicates this creates, keeping first occurrences.
std::vector<Delta> withhold(const GroundTheory& theory, const std::vector<Delta>& solutions,
                            const std::vector<std::string>& predicates);

} // namespace alp
