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

#include <catch2/catch_amalgamated.hpp>

using namespace alp;

TEST_CASE("body disjunction distributes into separate constraints", "[model][normalize]") {
    auto p = test::program_of(
        "abducible p/2. r(1). c(1)."
        "(r(R), c(C)) <- p(R,C)."
        "false <- p(R1,C1), p(R2,C2), R1<R2, (C1=C2 ; abs(R2-R1)=abs(C2-C1)).");
    REQUIRE(p.constraints.size() == 4);
    CHECK(to_string(p.constraints[0]) == "r(R) <- p(R,C).");
    CHECK(to_string(p.constraints[1]) == "c(C) <- p(R,C).");
    CHECK(to_string(p.constraints[2]) == "false <- p(R1,C1), p(R2,C2), R1 < R2, C1 = C2.");
    CHECK(to_string(p.constraints[3]) == "false <- p(R1,C1), p(R2,C2), R1 < R2, abs(R2-R1) = abs(C2-C1).");
}

TEST_CASE("head disjunction over a conjunction becomes a product of clauses", "[model][normalize]") {
    auto p = test::program_of("a. b. c. d. ((a, b) ; (c, d)) <- true.");
    REQUIRE(p.constraints.size() == 4);
    CHECK(to_string(p.constraints[0]) == "a ; c <- true.");
    CHECK(to_string(p.constraints[3]) == "b ; d <- true.");
}

TEST_CASE("definition bodies distribute", "[model][normalize]") {
    auto p = test::program_of("q(1). r(1). s(1). p(X) :- q(X), (r(X) ; s(X)).");
    REQUIRE(p.definitions.size() == 5);
    CHECK(to_string(p.definitions[3]) == "p(X) :- q(X), r(X).");
    CHECK(to_string(p.definitions[4]) == "p(X) :- q(X), s(X).");
}

TEST_CASE("program without sugar is unchanged", "[model][normalize]") {
    auto src = parse_or_throw("abducible q/1. p(X) :- q(X), not r(X). r(2). false <- p(X), X > 3.");
    Program p = normalize(src);
    CHECK(to_source(p) == src);
}

TEST_CASE("normalize is idempotent", "[model][normalize]") {
    for (const auto& entry : std::filesystem::directory_iterator(test::data_dir() / "corpus")) {
        INFO(entry.path());
        Program once = normalize(parse_or_throw(test::slurp(entry.path())));
        Program twice = normalize(to_source(once));
        CHECK(once == twice);
    }
}

TEST_CASE("compound formulas under negation are rejected", "[model][normalize]") {
    auto src = parse_or_throw("a. b. c.\nfalse <- c, not (a ; b).");
    try {
        normalize(src);
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK(std::string(e.what()).find("disjunction under negation") != std::string::npos);
        REQUIRE(e.where());
        CHECK(e.where()->line == 2);
    }
    CHECK_THROWS_AS(normalize(parse_or_throw("a. b. false <- not (a, b).")), Error);
}

TEST_CASE("arithmetic in body atoms is rejected", "[model][normalize]") {
    CHECK_THROWS_AS(test::program_of("q(1). p(X) :- q(X+1)."), Error);
}

TEST_CASE("classify the queens program", "[model][classify]") {
    auto p = normalize(parse_or_throw(test::slurp(test::data_dir() / "queens_verbatim.alp")));
    auto c = classify_predicates(p);
    CHECK(c.at({"position", 2}) == PredicateKind::Abducible);
    for (const char* d : {"size", "row", "column", "row_has_queen"}) {
        INFO(d);
        CHECK(c.at({d, 1}) == PredicateKind::Defined);
    }
    CHECK(c.at({"in", 2}) == PredicateKind::Builtin);
    CHECK(c.at({"=", 2}) == PredicateKind::Builtin);
}

TEST_CASE("classify the planning program", "[model][classify]") {
    auto p = normalize(parse_or_throw(test::slurp(test::programs_dir() / "plan.alp")));
    auto c = classify_predicates(p);
    CHECK(c.at({"move", 3}) == PredicateKind::Abducible);
    CHECK(c.at({"initially_on", 2}) == PredicateKind::Abducible);
    CHECK(c.at({"on", 3}) == PredicateKind::Defined);
    CHECK(c.at({"terminates_on", 2}) == PredicateKind::Defined);
    CHECK(c.at({"block", 1}) == PredicateKind::Defined);
    CHECK(c.at({"location", 1}) == PredicateKind::Defined);
    CHECK(c.at({"movetime", 1}) == PredicateKind::Defined);
    CHECK(c.at({"maxtime", 1}) == PredicateKind::Defined);
}

TEST_CASE("classification errors", "[model][classify]") {
    try {
        classify_predicates(test::program_of("abducible p/1. p(1)."));
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK(std::string(e.what()).find("p/1") != std::string::npos);
    }
    try {
        classify_predicates(test::program_of("a :- b."));
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK(std::string(e.what()).find("undefined predicate b/0") != std::string::npos);
    }
    CHECK_THROWS_AS(classify_predicates(test::program_of("domain d == 1..2. d(3).")), Error);
}

TEST_CASE("domains define unary predicates", "[model][classify]") {
    auto c = classify_predicates(test::program_of("domain d == 1..3. p(X) :- d(X)."));
    CHECK(c.at({"d", 1}) == PredicateKind::Defined);
}

TEST_CASE("values order integers before symbols", "[model]") {
    CHECK(Value(3) < Value(10));
    CHECK(Value(100) < Value::symbol("a"));
    CHECK(Value::symbol("a") < Value::symbol("table"));
    CHECK(Value(-1) < Value(0));
}

TEST_CASE("atom interning round trip", "[model][atoms]") {
    AtomTable t;
    PredId p = t.predicate("on", 3);
    PredId q = t.predicate("flag", 0, true);
    std::vector<AtomId> ids;
    for (int b = 1; b <= 4; ++b)
        for (int time = 0; time < 3; ++time) ids.push_back(t.intern(p, {Value(b), Value::symbol("table"), Value(time)}));
    ids.push_back(t.intern(q, {}));
    CHECK(t.size() == ids.size());
    for (AtomId id : ids) {
        const GroundAtom& g = t.atom(id);
        CHECK(t.intern(g.pred, g.args) == id);
        CHECK(t.find(g) == id);
    }
    CHECK(t.str(ids[0]) == "on(1,table,0)");
    CHECK(t.str(ids.back()) == "flag");
    CHECK(t.is_abducible(ids.back()));
    CHECK_FALSE(t.is_abducible(ids[0]));
    CHECK(t.less(ids.back(), ids[0]));
    CHECK(t.less(ids[0], ids[1]));
}

TEST_CASE("spans never affect structural equality", "[model]") {
    auto a = parse_or_throw("p(1).\nq(X) :- p(X).");
    auto b = parse_or_throw("\n\n   p(1).   q(X) :-\n p(X).");
    CHECK(a == b);
}
