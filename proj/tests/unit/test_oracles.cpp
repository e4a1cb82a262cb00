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

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace alp::oracles;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> positions(const std::vector<int>& cols) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::size_t r = 0; r < cols.size(); ++r) out.insert({static_cast<std::int64_t>(r + 1), cols[r]});
    return out;
}

BoardConfig initial() {
    return {{1, Location::on(2)}, {2, Location::table()}, {3, Location::on(4)},
            {4, Location::table()}, {5, Location::on(6)}, {6, Location::table()}};
}

} // namespace

TEST_CASE("queens counts", "[oracles][queens]") {
    CHECK(queens_brute(1).count == 1);
    CHECK(queens_brute(2).count == 0);
    CHECK(queens_brute(3).count == 0);
    auto four = queens_brute(4);
    CHECK(four.count == 2);
    CHECK(four.solutions == std::vector<std::vector<int>>{{2, 4, 1, 3}, {3, 1, 4, 2}});
    CHECK(queens_brute(8).count == 92);
    CHECK_THROWS_AS(queens_brute(0), std::invalid_argument);
}

TEST_CASE("queens_check accepts exactly the oracle solutions", "[oracles][queens]") {
    auto eight = queens_brute(8);
    for (const auto& s : eight.solutions) CHECK(queens_check(8, positions(s)));
    CHECK(std::is_sorted(eight.solutions.begin(), eight.solutions.end()));
    CHECK(queens_check(8, positions({1, 5, 8, 6, 3, 7, 2, 4})));
}

TEST_CASE("queens_check rejections", "[oracles][queens]") {
    auto good = positions({2, 4, 1, 3});
    auto two_in_row = good;
    two_in_row.insert({1, 4});
    CHECK_FALSE(queens_check(4, two_in_row));
    auto missing = good;
    missing.erase({3, 1});
    CHECK_FALSE(queens_check(4, missing));
    CHECK_FALSE(queens_check(4, positions({1, 2, 3, 4})));
    CHECK_FALSE(queens_check(4, positions({2, 4, 1, 5})));
}

TEST_CASE("simulate the six-move plan", "[oracles][plan]") {
    std::vector<Move> plan{{1, Location::table(), 0}, {3, Location::table(), 0}, {2, Location::on(1), 1},
                           {5, Location::on(4), 1},   {3, Location::on(2), 2},   {6, Location::on(5), 2}};
    auto out = simulate_plan(initial(), plan, 3);
    REQUIRE(std::holds_alternative<BoardConfig>(out));
    BoardConfig goal{{1, Location::table()}, {2, Location::on(1)}, {3, Location::on(2)},
                     {4, Location::table()}, {5, Location::on(4)}, {6, Location::on(5)}};
    CHECK(std::get<BoardConfig>(out) == goal);
}

TEST_CASE("an empty plan keeps the initial state", "[oracles][plan]") {
    auto out = simulate_plan(initial(), {}, 3);
    REQUIRE(std::holds_alternative<BoardConfig>(out));
    CHECK(std::get<BoardConfig>(out) == initial());
}

TEST_CASE("plan violations", "[oracles][plan]") {
    auto violation = [](const std::vector<Move>& moves) {
        auto out = simulate_plan(initial(), moves, 3);
        REQUIRE(std::holds_alternative<Violation>(out));
        return std::get<Violation>(out);
    };
    auto v = violation({{2, Location::table(), 0}});
    CHECK(v.time == 0);
    CHECK(v.rule == "clear");

    CHECK(violation({{1, Location::on(3), 0}, {3, Location::table(), 0}}).rule == "moving-target");
    CHECK(violation({{1, Location::table(), 0}, {1, Location::on(6), 0}}).rule == "two-locations");
    CHECK(violation({{1, Location::table(), 0}, {3, Location::table(), 0}, {5, Location::table(), 0}}).rule ==
          "gripper-limit");
    auto shared = violation({{1, Location::on(4), 0}});
    CHECK(shared.rule == "shared-support");
    CHECK(shared.time == 1);
    auto shared2 = violation({{3, Location::table(), 0}, {1, Location::on(4), 1}, {5, Location::on(4), 1}});
    CHECK(shared2.rule == "shared-support");
    CHECK(shared2.time == 2);
    CHECK(violation({{7, Location::table(), 0}}).rule == "unknown-block");
    CHECK_THROWS_AS(simulate_plan(initial(), {{1, Location::table(), 3}}, 3), std::invalid_argument);
}

TEST_CASE("brute-force well-founded model", "[oracles][wfs]") {
    CHECK(wfs_brute(2, {{0, {}, {1}}, {1, {}, {0}}}) == std::vector<Truth>{Truth::Undefined, Truth::Undefined});
    CHECK(wfs_brute(3, {{0, {}, {}}, {1, {0}, {}}}) == std::vector<Truth>{Truth::True, Truth::True, Truth::False});
    CHECK(wfs_brute(1, {{0, {}, {0}}}) == std::vector<Truth>{Truth::Undefined});
    CHECK(wfs_brute(2, {{0, {1}, {}}, {1, {0}, {}}}) == std::vector<Truth>{Truth::False, Truth::False});
    CHECK(wfs_brute(3, {{0, {}, {1}}, {1, {}, {2}}}) == std::vector<Truth>{Truth::False, Truth::True, Truth::False});
    CHECK_THROWS_AS(wfs_brute(kWfsBruteMaxAtoms + 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(wfs_brute(1, {{1, {}, {}}}), std::invalid_argument);
}
