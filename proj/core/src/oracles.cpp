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

#include <alp/oracles.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace alp::oracles {

QueensResult queens_brute(int n) {
    if (n < 1) throw std::invalid_argument("queens_brute: n must be positive");
    QueensResult res;
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 1);
    do {
        bool safe = true;
        for (int i = 0; i < n && safe; ++i)
            for (int j = i + 1; j < n && safe; ++j)
                if (std::abs(i - j) == std::abs(cols[i] - cols[j])) safe = false;
        if (safe) res.solutions.push_back(cols);
    } while (std::next_permutation(cols.begin(), cols.end()));
    res.count = res.solutions.size();
    return res;
}

bool queens_check(int n, const std::set<std::pair<std::int64_t, std::int64_t>>& positions) {
    std::vector<int> per_row(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> per_col(static_cast<std::size_t>(n) + 1, 0);
    for (auto [r, c] : positions) {
        if (r < 1 || r > n || c < 1 || c > n) return false;
        ++per_row[static_cast<std::size_t>(r)];
        ++per_col[static_cast<std::size_t>(c)];
    }
    for (int i = 1; i <= n; ++i)
        if (per_row[i] != 1 || per_col[i] != 1) return false;
    for (auto a = positions.begin(); a != positions.end(); ++a)
        for (auto b = std::next(a); b != positions.end(); ++b)
            if (std::llabs(a->first - b->first) == std::llabs(a->second - b->second)) return false;
    return true;
}

std::string Location::str() const { return block ? std::to_string(*block) : "table"; }

PlanOutcome simulate_plan(const BoardConfig& initial, const std::vector<Move>& moves, int horizon) {
    for (const auto& m : moves)
        if (m.time < 0 || m.time >= horizon)
            throw std::invalid_argument("move of block " + std::to_string(m.block) + " at time " +
                                        std::to_string(m.time) + " is outside 0.." + std::to_string(horizon - 1));
    BoardConfig state = initial;
    for (int t = 0; t < horizon; ++t) {
        std::vector<Move> now;
        for (const auto& m : moves)
            if (m.time == t) now.push_back(m);
        std::sort(now.begin(), now.end());

        for (const auto& m : now) {
            if (!state.count(m.block))
                return Violation{t, "unknown-block", "block " + std::to_string(m.block)};
            if (m.to.block && !state.count(*m.to.block))
                return Violation{t, "unknown-block", "block " + m.to.str()};
        }
        if (now.size() > 2) return Violation{t, "gripper-limit", std::to_string(now.size()) + " moves"};
        for (std::size_t i = 0; i < now.size(); ++i)
            for (std::size_t j = i + 1; j < now.size(); ++j)
                if (now[i].block == now[j].block)
                    return Violation{t, "two-locations", "block " + std::to_string(now[i].block)};
        for (const auto& m : now) {
            for (const auto& [b, loc] : state)
                if (loc.block == m.block)
                    return Violation{t, "clear", "block " + std::to_string(b) + " is on block " + std::to_string(m.block)};
            for (const auto& other : now)
                if (m.to.block && *m.to.block == other.block)
                    return Violation{t, "moving-target", "block " + std::to_string(m.block) + " onto moving block " +
                                                              std::to_string(other.block)};
        }
        for (const auto& m : now) state[m.block] = m.to;
        std::map<int, int> support;
        for (const auto& [b, loc] : state) {
            if (!loc.block) continue;
            if (support.count(*loc.block))
                return Violation{t + 1, "shared-support", "blocks " + std::to_string(support[*loc.block]) + " and " +
                                                              std::to_string(b) + " on block " + loc.str()};
            support[*loc.block] = b;
        }
    }
    return state;
}

std::vector<Truth> wfs_brute(int atoms, const std::vector<Rule>& rules) {
    if (atoms < 0 || atoms > kWfsBruteMaxAtoms)
        throw std::invalid_argument("wfs_brute supports at most " + std::to_string(kWfsBruteMaxAtoms) + " atoms");
    for (const auto& r : rules) {
        auto bad = [&](int a) { return a < 0 || a >= atoms; };
        if (bad(r.head) || std::any_of(r.pos.begin(), r.pos.end(), bad) || std::any_of(r.neg.begin(), r.neg.end(), bad))
            throw std::invalid_argument("wfs_brute: atom out of range");
    }
    std::vector<Truth> val(static_cast<std::size_t>(atoms), Truth::Undefined);
    auto lit_false = [&](int a, bool positive) {
        return positive ? val[a] == Truth::False : val[a] == Truth::True;
    };
    auto lit_true = [&](int a, bool positive) {
        return positive ? val[a] == Truth::True : val[a] == Truth::False;
    };
    for (;;) {
        std::vector<bool> derived(static_cast<std::size_t>(atoms), false);
        for (const auto& r : rules) {
            bool all = true;
            for (int p : r.pos) all = all && lit_true(p, true);
            for (int n : r.neg) all = all && lit_true(n, false);
            if (all) derived[r.head] = true;
        }
        // A set is unfounded if every rule for each of its atoms has a false
        // body literal or a positive body atom inside the set.
        std::uint32_t greatest = 0;
        for (std::uint32_t set = 1; set < (1u << atoms); ++set) {
            bool unfounded = true;
            for (const auto& r : rules) {
                if (!(set >> r.head & 1u)) continue;
                bool blocked = false;
                for (int p : r.pos) blocked = blocked || lit_false(p, true) || (set >> p & 1u);
                for (int n : r.neg) blocked = blocked || lit_false(n, false);
                if (!blocked) {
                    unfounded = false;
                    break;
                }
            }
            if (unfounded) greatest |= set;
        }
        std::vector<Truth> next(static_cast<std::size_t>(atoms), Truth::Undefined);
        for (int a = 0; a < atoms; ++a) {
            if (derived[a]) next[a] = Truth::True;
            else if (greatest >> a & 1u) next[a] = Truth::False;
        }
        if (next == val) return val;
        val = std::move(next);
    }
}

} // namespace alp::oracles
