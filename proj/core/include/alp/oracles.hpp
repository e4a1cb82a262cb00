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

// Brute-force reference checkers. None of these share code with the grounder,
// the well-founded engine or the solver.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace alp::oracles {

struct QueensResult {
    std::size_t count = 0;
    std::vector<std::vector<int>> solutions; // column of the queen in row 1..n, lexicographic
};

/// Enumerates all n! row-to-column permutations and keeps the diagonal-safe ones.
QueensResult queens_brute(int n);

/// `positions` are (row, column) pairs.
bool queens_check(int n, const std::set<std::pair<std::int64_t, std::int64_t>>& positions);

/// A block number, or the table.
struct Location {
    std::optional<int> block; // nullopt: table

    static Location table() { return {}; }
    static Location on(int b) { return {b}; }
    bool is_table() const { return !block; }
    std::string str() const;
    friend auto operator<=>(const Location&, const Location&) = default;
};

using BoardConfig = std::map<int, Location>; // block -> what it stands on

struct Move {
    int block = 0;
    Location to;
    int time = 0;
    friend auto operator<=>(const Move&, const Move&) = default;
};

struct Violation {
    int time = 0;
    std::string rule; // clear, moving-target, two-locations, gripper-limit, shared-support, unknown-block
    std::string detail;
};

using PlanOutcome = std::variant<BoardConfig, Violation>;

/// Steps the world through times 0..horizon-1 applying the moves.
PlanOutcome simulate_plan(const BoardConfig& initial, const std::vector<Move>& moves, int horizon);

/// Small ground normal program over atoms 0..atoms-1.
struct Rule {
    int head = 0;
    std::vector<int> pos;
    std::vector<int> neg;
};

enum class Truth : std::uint8_t { False, True, Undefined };

constexpr int kWfsBruteMaxAtoms = 12;

/// Well-founded model by definition: immediate consequences plus the greatest
/// unfounded set (found by enumerating every subset of the atoms), iterated to
/// a fixpoint. Throws std::invalid_argument above kWfsBruteMaxAtoms.
std::vector<Truth> wfs_brute(int atoms, const std::vector<Rule>& rules);

} // namespace alp::oracles
