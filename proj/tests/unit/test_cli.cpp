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

#include "test_support.hpp"

#include <alp/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace alp;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string program(const char* name) { return (test::programs_dir() / name).string(); }

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("solve prints one block per solution", "[cli]") {
    auto r = run({"solve", program("queens.alp"), "--all", "--stats"});
    CHECK(r.code == cli::kFound);
    CHECK(count(r.out, "% solution ") == 92);
    CHECK(r.out.find("% stats: solutions=92 complete=yes") != std::string::npos);
    CHECK(r.out.find("% solution 1\nposition(") == 0);
}

TEST_CASE("no solutions exits with one", "[cli]") {
    auto r = run({"solve", program("queens.alp"), "-c", "size=2"});
    CHECK(r.code == cli::kNone);
    CHECK(r.out.find("no solutions") == 0);
}

TEST_CASE("default solve stops after one solution", "[cli]") {
    auto r = run({"solve", program("queens.alp"), "-c", "size=5"});
    CHECK(r.code == cli::kFound);
    CHECK(count(r.out, "% solution ") == 1);
    auto three = run({"solve", program("queens.alp"), "-c", "size=5", "--max-models", "3"});
    CHECK(count(three.out, "% solution ") == 3);
}

TEST_CASE("root refutations name the source constraint", "[cli]") {
    auto path = std::filesystem::temp_directory_path() / "alp_cli_refuted.alp";
    {
        std::ofstream f(path);
        f << "abducible a/0.\np.\nfalse <- p.\n";
    }
    auto r = run({"solve", path.string()});
    CHECK(r.code == cli::kNone);
    CHECK(r.out.find("% refuted by") != std::string::npos);
    CHECK(r.out.find("false <- p.") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("check accepts the six-move plan", "[cli]") {
    auto r = run({"check", program("plan.alp"), "--delta", program("plan-delta.json")});
    CHECK(r.code == cli::kFound);
    CHECK(r.out == "Sat\n");
}

TEST_CASE("check reports violated constraints and undefined atoms", "[cli]") {
    auto dir = std::filesystem::temp_directory_path();
    auto empty = dir / "alp_cli_empty.json";
    auto with_a = dir / "alp_cli_a.json";
    std::ofstream(empty) << "[]";
    std::ofstream(with_a) << R"([{"pred": "a", "args": []}])";

    auto unsat = run({"check", program("queens.alp"), "--delta", empty.string()});
    CHECK(unsat.code == cli::kNone);
    CHECK(unsat.out.find("UnsatConstraint\n") == 0);
    CHECK(unsat.out.find("row_has_queen(1) <- true.") != std::string::npos);

    auto odd = run({"check", program("odd_loop.alp"), "--delta", with_a.string()});
    CHECK(odd.code == cli::kNone);
    CHECK(odd.out == "NotTwoValued\n  undefined: p\n");
    std::filesystem::remove(empty);
    std::filesystem::remove(with_a);
}

TEST_CASE("json output round-trips through parse_delta", "[cli][json]") {
    GroundTheory th = test::theory_of_file(test::programs_dir() / "plan.alp");
    auto rep = solve(th, {.max_models = 2});
    REQUIRE_FALSE(rep.solutions.empty());
    for (const auto& s : rep.solutions) CHECK(cli::parse_delta(th, cli::format_json(th, s)) == s);

    auto r = run({"solve", program("plan.alp"), "--json", "--max-models", "2"});
    CHECK(r.code == cli::kFound);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t k = 0;
    while (std::getline(lines, line)) {
        REQUIRE(k < rep.solutions.size());
        CHECK(cli::parse_delta(th, line) == rep.solutions[k++]);
    }
    CHECK(k == rep.solutions.size());
}

TEST_CASE("parse_delta rejects non-candidates", "[cli][json]") {
    GroundTheory th = test::theory_of_file(test::programs_dir() / "queens.alp", {{"size", 4}});
    CHECK_THROWS_AS(cli::parse_delta(th, R"([{"pred": "position", "args": [9, 9]}])"), Error);
    CHECK_THROWS_AS(cli::parse_delta(th, R"([{"pred": "row_has_queen", "args": [1]}])"), Error);
    CHECK_THROWS_AS(cli::parse_delta(th, R"({"pred": "position"})"), Error);
    CHECK_THROWS_AS(cli::parse_delta(th, "not json"), Error);
}

TEST_CASE("format_facts", "[cli]") {
    GroundTheory th = test::theory_of_file(test::programs_dir() / "queens.alp", {{"size", 4}});
    auto rep = solve(th, {.max_models = 1});
    REQUIRE(rep.solutions.size() == 1);
    CHECK(cli::format_facts(th, rep.solutions[0], 1) ==
          "% solution 1\nposition(1,3).\nposition(2,1).\nposition(3,4).\nposition(4,2).\n");
}

TEST_CASE("query option restricts solutions", "[cli][query]") {
    auto r = run({"solve", program("queens.alp"), "--all", "--query", "position(1,5)"});
    CHECK(r.code == cli::kFound);
    std::size_t expected = 0;
    for (const auto& s : oracles::queens_brute(8).solutions) expected += s[0] == 5;
    CHECK(count(r.out, "% solution ") == expected);
    CHECK(count(r.out, "position(1,5).") == expected);
    CHECK(r.out.find("x") == std::string::npos);
}

TEST_CASE("ground prints the dump", "[cli]") {
    auto r = run({"ground", program("queens.alp"), "-c", "size=3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("% atoms ") == 0);
    CHECK(r.out.find("abducible position(1,1).") != std::string::npos);
}

TEST_CASE("oracle subcommand", "[cli][oracles]") {
    auto q = run({"oracle", "queens", "4"});
    CHECK(q.code == 0);
    CHECK(q.out.find("queens 4: 2 solutions") == 0);
    auto p = run({"oracle", "plan", program("plan-oracle.json")});
    CHECK(p.code == 0);
    CHECK(p.out.find("goal reached") != std::string::npos);
}

TEST_CASE("usage and input errors exit with two", "[cli][errors]") {
    CHECK(run({}).code == cli::kFailure);
    CHECK(run({"solve"}).code == cli::kFailure);
    CHECK(run({"solve", "/nonexistent/file.alp"}).code == cli::kFailure);
    CHECK(run({"solve", program("queens.alp"), "-c", "size"}).code == cli::kFailure);
    CHECK(run({"solve", program("queens.alp"), "-c", "nosuch=3"}).code == cli::kFailure);
    auto bad = run({"solve", (test::data_dir() / "plan_verbatim.alp").string()});
    CHECK(bad.code == cli::kFailure);
    CHECK(bad.err.find(":4:") != std::string::npos);
}
