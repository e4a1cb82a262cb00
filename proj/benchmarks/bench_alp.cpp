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

#include <alp/ground.hpp>
#include <alp/normalize.hpp>
#include <alp/parser.hpp>
#include <alp/solver.hpp>
#include <alp/wfs.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace {

alp::Program load(const char* name) {
    std::ifstream in(std::filesystem::path(ALP_PROGRAMS_DIR) / name);
    std::ostringstream s;
    s << in.rdbuf();
    return alp::normalize(alp::parse_or_throw(s.str(), name));
}

void BM_ParsePlan(benchmark::State& state) {
    std::ifstream in(std::filesystem::path(ALP_PROGRAMS_DIR) / "plan.alp");
    std::ostringstream s;
    s << in.rdbuf();
    const std::string text = s.str();
    for (auto _ : state) benchmark::DoNotOptimize(alp::parse_or_throw(text));
}
BENCHMARK(BM_ParsePlan);

void BM_GroundQueens(benchmark::State& state) {
    alp::Program p = load("queens.alp");
    for (auto _ : state) benchmark::DoNotOptimize(alp::ground_program(p, {{"size", state.range(0)}}));
}
BENCHMARK(BM_GroundQueens)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SolveQueensAll(benchmark::State& state) {
    alp::GroundTheory th = alp::ground_program(load("queens.alp"), {{"size", state.range(0)}});
    alp::SolveOptions opts;
    opts.max_models = std::nullopt;
    for (auto _ : state) benchmark::DoNotOptimize(alp::solve(th, opts));
}
BENCHMARK(BM_SolveQueensAll)->DenseRange(4, 10, 1)->Unit(benchmark::kMillisecond);

void BM_GroundPlan(benchmark::State& state) {
    alp::Program p = load("plan.alp");
    for (auto _ : state) benchmark::DoNotOptimize(alp::ground_program(p));
}
BENCHMARK(BM_GroundPlan)->Unit(benchmark::kMillisecond);

void BM_SolvePlanFirst(benchmark::State& state) {
    alp::GroundTheory th = alp::ground_program(load("plan.alp"));
    alp::SolveOptions opts;
    opts.max_models = 1;
    for (auto _ : state) benchmark::DoNotOptimize(alp::solve(th, opts));
}
BENCHMARK(BM_SolvePlanFirst)->Unit(benchmark::kMillisecond);

void BM_WellFoundedRandom(benchmark::State& state) {
    const auto atoms = static_cast<std::uint32_t>(state.range(0));
    std::mt19937_64 rng(42);
    std::vector<alp::GroundClause> clauses;
    for (std::uint32_t i = 0; i < 3 * atoms; ++i) {
        alp::GroundClause c{alp::atom_id(static_cast<std::uint32_t>(rng() % atoms)), {}, {}};
        for (int k = 0; k < 2; ++k) c.pos.push_back(alp::atom_id(static_cast<std::uint32_t>(rng() % atoms)));
        if (rng() % 2) c.neg.push_back(alp::atom_id(static_cast<std::uint32_t>(rng() % atoms)));
        clauses.push_back(std::move(c));
    }
    std::vector<alp::AtomId> facts;
    for (std::uint32_t i = 0; i < atoms / 10; ++i) facts.push_back(alp::atom_id(static_cast<std::uint32_t>(rng() % atoms)));
    alp::WellFoundedEvaluator ev(atoms, clauses);
    for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate(facts));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WellFoundedRandom)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

} // namespace

BENCHMARK_MAIN();
