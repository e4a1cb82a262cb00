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

#include <alp/cli.hpp>
#include <alp/normalize.hpp>
#include <alp/oracles.hpp>
#include <alp/parser.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace alp::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string path;
    bool all = false;
    std::size_t max_models = 1;
    bool minimal = false;
    bool json_out = false;
    bool stats = false;
    bool trace = false;
    std::vector<std::string> constants;
    std::string delta;
    std::string query;
    std::string oracle;
    std::string oracle_arg;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ConstantOverrides parse_overrides(const std::vector<std::string>& items) {
    ConstantOverrides out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        std::int64_t v = 0;
        if (eq == std::string::npos || eq == 0) throw Error("malformed constant override '" + item + "', expected NAME=INT");
        const char* first = item.data() + eq + 1;
        const char* last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw Error("malformed constant override '" + item + "', expected NAME=INT");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

Program load(const std::string& path, std::ostream& err, bool& ok) {
    ParseResult parsed = parse_text(read_file(path), path);
    ok = parsed.ok();
    for (const auto& d : parsed.diagnostics) err << d.str() << '\n';
    if (!ok) return {};
    return normalize(parsed.program);
}

json value_json(const Value& v) {
    if (v.is_int()) return v.as_int();
    return v.as_symbol();
}

void warn_unstratified(const GroundTheory& th, std::ostream& err) {
    if (!th.stratified)
        err << "warning: the ground definitions are not stratified; every candidate is checked against the full "
               "well-founded model\n";
}

std::string describe(const GroundTheory& th, std::size_t constraint) {
    const GroundConstraint& c = th.constraints[constraint];
    std::string s;
    if (c.origin < th.sources.size()) {
        const Constraint& src = th.sources[c.origin];
        if (src.span.valid()) s += src.span.str() + ": ";
        s += to_string(src) + "\n  instance: ";
    }
    return s + th.str(c);
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    bool ok = false;
    Program prog = load(o.path, err, ok);
    if (!ok) return kFailure;
    std::vector<std::string> hidden;
    if (!o.query.empty()) {
        QueryTranslation q = translate_query(parse_query(o.query), prog);
        prog = std::move(q.program);
        if (!q.answer.empty()) hidden = {q.answer};
    }
    GroundTheory th = ground_program(prog, parse_overrides(o.constants));
    warn_unstratified(th, err);

    SolveOptions opts;
    if (!o.all) opts.max_models = o.max_models;
    opts.minimal_only = o.minimal;
    if (o.trace) opts.trace = [&err](const std::string& line) { err << line << '\n'; };
    // Hidden answer atoms can make distinct solutions coincide after
    // projection, so the limit is applied afterwards.
    if (!hidden.empty()) opts.max_models.reset();
    SolveReport rep = solve(th, opts);
    std::vector<Delta> sols = hidden.empty() ? rep.solutions : withhold(th, rep.solutions, hidden);
    if (!hidden.empty() && !o.all && sols.size() > o.max_models) sols.resize(o.max_models);

    for (std::size_t k = 0; k < sols.size(); ++k) {
        if (o.json_out) out << format_json(th, sols[k]) << '\n';
        else out << (k ? "\n" : "") << format_facts(th, sols[k], k + 1);
    }
    if (sols.empty()) {
        std::ostream& os = o.json_out ? err : out;
        os << "no solutions\n";
        if (rep.root_conflict) os << "% refuted by " << describe(th, *rep.root_conflict) << '\n';
        else if (rep.definitions_inconsistent) os << "% the definitions have no two-valued model for any candidate\n";
    }
    if (o.stats) {
        std::ostream& os = o.json_out ? err : out;
        os << "% stats: solutions=" << sols.size() << " complete=" << (rep.complete ? "yes" : "no")
           << " nodes=" << rep.stats.nodes << " constraint_checks=" << rep.stats.constraint_checks
           << " pruned=" << rep.stats.pruned << " rejected_leaves=" << rep.stats.rejected_leaves
           << " propagations=" << rep.stats.propagations << " atoms=" << th.atoms.size()
           << " universe=" << th.universe.size() << " clauses=" << th.clauses.size()
           << " constraints=" << th.constraints.size() << '\n';
        err << "% wall time: " << std::fixed << std::setprecision(3) << rep.stats.wall_time.count() << " s\n";
    }
    return sols.empty() ? kNone : kFound;
}

int cmd_ground(const Options& o, std::ostream& out, std::ostream& err) {
    bool ok = false;
    Program prog = load(o.path, err, ok);
    if (!ok) return kFailure;
    GroundTheory th = ground_program(prog, parse_overrides(o.constants));
    warn_unstratified(th, err);
    out << dump(th);
    return kFound;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    bool ok = false;
    Program prog = load(o.path, err, ok);
    if (!ok) return kFailure;
    GroundTheory th = ground_program(prog, parse_overrides(o.constants));
    Delta delta = parse_delta(th, read_file(o.delta));
    CheckResult r = check_delta(th, delta);
    switch (r.kind) {
    case CheckResult::Kind::Sat:
        out << "Sat\n";
        return kFound;
    case CheckResult::Kind::UnsatConstraint:
        out << "UnsatConstraint\n  " << describe(th, r.constraint) << '\n';
        return kNone;
    case CheckResult::Kind::NotTwoValued:
        out << "NotTwoValued\n  undefined:";
        for (AtomId a : r.undefined) out << ' ' << th.atoms.str(a);
        out << '\n';
        return kNone;
    }
    return kFailure;
}

oracles::Location location_of(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "table") throw Error("unknown location " + j.dump());
        return oracles::Location::table();
    }
    if (!j.is_number_integer()) throw Error("malformed location " + j.dump());
    return oracles::Location::on(j.get<int>());
}

std::vector<json> move_args(const json& moves) {
    std::vector<json> out;
    for (const auto& m : moves) {
        if (m.is_array()) out.push_back(m);
        else if (m.is_object() && m.value("pred", "") == "move") out.push_back(m.at("args"));
        else if (!m.is_object()) throw Error("malformed move " + m.dump());
    }
    return out;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    if (o.oracle == "queens") {
        int n = 0;
        auto [ptr, ec] = std::from_chars(o.oracle_arg.data(), o.oracle_arg.data() + o.oracle_arg.size(), n);
        if (ec != std::errc() || ptr != o.oracle_arg.data() + o.oracle_arg.size() || n < 1)
            throw Error("queens oracle expects a positive board size");
        auto res = oracles::queens_brute(n);
        out << "queens " << n << ": " << res.count << " solutions\n";
        for (const auto& s : res.solutions) {
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << '\n';
        }
        return res.count ? kFound : kNone;
    }
    if (o.oracle == "plan") {
        json j = json::parse(read_file(o.oracle_arg));
        oracles::BoardConfig initial;
        for (const auto& p : j.at("initial")) initial[p.at(0).get<int>()] = location_of(p.at(1));
        std::vector<oracles::Move> moves;
        for (const auto& a : move_args(j.at("moves"))) {
            if (a.size() != 3) throw Error("malformed move " + a.dump());
            moves.push_back({a.at(0).get<int>(), location_of(a.at(1)), a.at(2).get<int>()});
        }
        int horizon = j.at("horizon").get<int>();
        auto outcome = oracles::simulate_plan(initial, moves, horizon);
        if (auto* v = std::get_if<oracles::Violation>(&outcome)) {
            out << "violation at time " << v->time << " (" << v->rule << "): " << v->detail << '\n';
            return kNone;
        }
        const auto& final = std::get<oracles::BoardConfig>(outcome);
        out << "final:";
        for (const auto& [b, l] : final) out << " on(" << b << ',' << l.str() << ')';
        out << '\n';
        if (j.contains("goal")) {
            for (const auto& g : j.at("goal")) {
                int b = g.at(0).get<int>();
                auto it = final.find(b);
                if (it == final.end() || it->second != location_of(g.at(1))) {
                    out << "goal not reached: on(" << b << ',' << location_of(g.at(1)).str() << ")\n";
                    return kNone;
                }
            }
            out << "goal reached\n";
        }
        return kFound;
    }
    throw Error("unknown oracle '" + o.oracle + "' (expected queens or plan)");
}

} // namespace

std::string format_facts(const GroundTheory& theory, const Delta& delta, std::size_t k) {
    std::string s = "% solution " + std::to_string(k) + "\n";
    for (AtomId a : delta) s += theory.atoms.str(a) + ".\n";
    return s;
}

std::string format_json(const GroundTheory& theory, const Delta& delta) {
    json arr = json::array();
    for (AtomId a : delta) {
        const GroundAtom& g = theory.atoms.atom(a);
        json args = json::array();
        for (const auto& v : g.args) args.push_back(value_json(v));
        arr.push_back({{"pred", theory.atoms.pred(g.pred).name}, {"args", std::move(args)}});
    }
    return arr.dump();
}

Delta parse_delta(const GroundTheory& theory, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    }
    catch (const json::exception& e) {
        throw Error(std::string("malformed delta file: ") + e.what());
    }
    if (!j.is_array()) throw Error("delta file must hold a JSON array");
    std::vector<AtomId> cands = theory.candidates();
    Delta out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("pred") || !item.at("pred").is_string())
            throw Error("malformed delta entry " + item.dump());
        std::string pred = item.at("pred").get<std::string>();
        std::vector<Value> args;
        if (item.contains("args")) {
            for (const auto& a : item.at("args")) {
                if (a.is_number_integer()) args.emplace_back(a.get<std::int64_t>());
                else if (a.is_string()) args.push_back(Value::symbol(a.get<std::string>()));
                else throw Error("malformed argument " + a.dump() + " in delta entry " + item.dump());
            }
        }
        auto p = theory.atoms.find_predicate(pred, static_cast<std::uint32_t>(args.size()));
        std::optional<AtomId> id;
        if (p) id = theory.atoms.find(GroundAtom{*p, args});
        if (!id || std::find(cands.begin(), cands.end(), *id) == cands.end())
            throw Error("delta atom " + item.dump() + " is not a candidate abducible");
        out.push_back(*id);
    }
    std::sort(out.begin(), out.end(), [&](AtomId a, AtomId b) { return theory.atoms.less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abductive logic programming solver", "alp"};
    app.require_subcommand(1);
    Options o;

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate abductive solutions");
    solve_cmd->add_option("path", o.path, "Program file")->required();
    solve_cmd->add_flag("--all", o.all, "Enumerate every solution");
    solve_cmd->add_option("--max-models", o.max_models, "Stop after N solutions (default 1)")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--minimal", o.minimal, "Keep only subset-minimal solutions");
    solve_cmd->add_flag("--json", o.json_out, "Print solutions as JSON lines");
    solve_cmd->add_flag("--stats", o.stats, "Print search statistics");
    solve_cmd->add_flag("--trace", o.trace, "Trace the search on standard error");
    solve_cmd->add_option("-c,--const", o.constants, "Override a constant, NAME=INT");
    solve_cmd->add_option("--query", o.query, "Only solutions in which the query holds, e.g. 'position(1,C)'");

    auto* ground_cmd = app.add_subcommand("ground", "Print the ground theory");
    ground_cmd->add_option("path", o.path, "Program file")->required();
    ground_cmd->add_option("-c,--const", o.constants, "Override a constant, NAME=INT");

    auto* check_cmd = app.add_subcommand("check", "Check one candidate solution");
    check_cmd->add_option("path", o.path, "Program file")->required();
    check_cmd->add_option("--delta", o.delta, "JSON file with the candidate facts")->required();
    check_cmd->add_option("-c,--const", o.constants, "Override a constant, NAME=INT");

    auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force reference checker");
    oracle_cmd->add_option("name", o.oracle, "queens or plan")->required();
    oracle_cmd->add_option("arg", o.oracle_arg, "Board size for queens, JSON file for plan")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kFound : kFailure;
    }

    try {
        if (*solve_cmd) return cmd_solve(o, out, err);
        if (*ground_cmd) return cmd_ground(o, out, err);
        if (*check_cmd) return cmd_check(o, out, err);
        return cmd_oracle(o, out);
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kFailure;
}

} // namespace alp::cli
