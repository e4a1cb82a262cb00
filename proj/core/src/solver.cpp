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

#include <alp/solver.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace alp {

// ---------------------------------------------------------------------------
// Reference check.

DeltaChecker::DeltaChecker(const GroundTheory& theory)
    : theory_(theory), wfs_(theory.atoms.size(), theory.clauses), candidates_(theory.atoms.size()) {
    for (AtomId a : theory.universe) candidates_.insert(a);
    for (AtomId a : theory.forced) candidates_.insert(a);
}

Interpretation DeltaChecker::model(std::span<const AtomId> delta, FixpointTrace* trace) const {
    auto [m, t] = wfs_.evaluate(delta);
    if (trace) *trace = std::move(t);
    return std::move(m);
}

namespace {

int rank(TruthValue v) {
    switch (v) {
    case TruthValue::False: return 0;
    case TruthValue::Undefined: return 1;
    case TruthValue::True: return 2;
    }
    return 0;
}

TruthValue negate(TruthValue v) {
    if (v == TruthValue::True) return TruthValue::False;
    if (v == TruthValue::False) return TruthValue::True;
    return v;
}

} // namespace

CheckResult DeltaChecker::check(std::span<const AtomId> delta, bool require_two_valued) const {
    Interpretation m = model(delta);
    CheckResult res;
    if (require_two_valued) {
        auto undef = m.with_value(TruthValue::Undefined);
        if (!undef.empty()) {
            std::sort(undef.begin(), undef.end(), [&](AtomId a, AtomId b) { return theory_.atoms.less(a, b); });
            res.kind = CheckResult::Kind::NotTwoValued;
            res.undefined = std::move(undef);
            return res;
        }
    }
    for (std::size_t i = 0; i < theory_.constraints.size(); ++i) {
        const auto& c = theory_.constraints[i];
        int body = 2;
        for (AtomId a : c.pos) body = std::min(body, rank(m[a]));
        for (AtomId a : c.neg) body = std::min(body, rank(negate(m[a])));
        if (body == 0) continue;
        int head = 0;
        for (const auto& h : c.heads) head = std::max(head, rank(h.positive ? m[h.atom] : negate(m[h.atom])));
        if (head < body) {
            res.kind = CheckResult::Kind::UnsatConstraint;
            res.constraint = i;
            return res;
        }
    }
    return res;
}

CheckResult check_delta(const GroundTheory& theory, std::span<const AtomId> delta) {
    std::unordered_set<std::uint32_t> allowed;
    for (AtomId a : theory.universe) allowed.insert(index(a));
    for (AtomId a : theory.forced) allowed.insert(index(a));
    for (AtomId a : delta)
        if (!allowed.count(index(a)))
            throw Error("atom " + (index(a) < theory.atoms.size() ? theory.atoms.str(a) : "#" + std::to_string(index(a))) +
                        " is not a candidate abducible");
    return DeltaChecker(theory).check(delta);
}

// ---------------------------------------------------------------------------
// Search.

namespace {

using Lit = std::uint32_t; // 2 * var + negated
constexpr Lit make_lit(std::uint32_t var, bool neg) { return var * 2 + (neg ? 1 : 0); }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool is_neg(Lit l) { return l & 1; }
constexpr Lit flip(Lit l) { return l ^ 1; }

constexpr std::uint32_t kNoReason = UINT32_MAX;
constexpr std::uint32_t kNoConstraint = UINT32_MAX;

class Search {
public:
    Search(const GroundTheory& th, const SolveOptions& opts) : th_(th), opts_(opts), checker_(th) {
        nvars_ = static_cast<std::uint32_t>(th.atoms.size());
        candidates_ = th.candidates();
        std::vector<bool> forced(nvars_, false), cand(nvars_, false);
        for (AtomId a : th.forced) forced[index(a)] = true;
        for (AtomId a : candidates_) cand[index(a)] = true;
        for (AtomId a : th.universe)
            if (!forced[index(a)]) decision_vars_.push_back(index(a));
        if (opts.branch_order == BranchOrder::LexDesc) std::reverse(decision_vars_.begin(), decision_vars_.end());

        for (AtomId a : th.forced) units_.push_back({make_lit(index(a), false), kNoConstraint});
        if (opts.propagate) {
            bool completion = opts.require_two_valued;
            if (completion) encode_completion(cand);
            encode_constraints(completion);
        }
        total_vars_ = nvars_ + aux_;
        value_.assign(total_vars_, 0);
        reason_.assign(total_vars_, kNoReason);
        watches_.assign(total_vars_ * 2, {});
        occ_.assign(total_vars_, 0);
        for (std::uint32_t ci = 0; ci < clauses_.size(); ++ci) {
            auto& c = clauses_[ci];
            watches_[c.lits[0]].push_back(ci);
            watches_[c.lits[1]].push_back(ci);
        }
        occ_lists_.assign(total_vars_, {});
        for (std::uint32_t ci = 0; ci < clauses_.size(); ++ci) {
            if (clauses_[ci].origin == kNoConstraint) continue;
            for (Lit l : clauses_[ci].lits) {
                ++occ_[var_of(l)];
                occ_lists_[var_of(l)].push_back(ci);
            }
        }
        sat_count_.assign(clauses_.size(), 0);
        root_origin_.assign(total_vars_, kNoConstraint);
    }

    SolveReport run() {
        auto start = std::chrono::steady_clock::now();
        SolveReport rep;
        bool conflict_at_root = false;
        std::optional<std::size_t> culprit;
        if (empty_constraint_ != kNoConstraint) {
            conflict_at_root = true;
            culprit = empty_constraint_;
        }
        for (const auto& [lit, origin] : units_) {
            if (conflict_at_root) break;
            if (value(lit) == -1) {
                conflict_at_root = true;
                if (origin != kNoConstraint) culprit = origin;
                else if (root_origin_[var_of(lit)] != kNoConstraint) culprit = root_origin_[var_of(lit)];
                break;
            }
            if (value(lit) == 0) {
                assign(lit, kNoReason);
                root_origin_[var_of(lit)] = origin;
            }
        }
        if (!conflict_at_root) {
            std::uint32_t conflict = propagate();
            if (conflict != kNoReason) {
                conflict_at_root = true;
                culprit = explain(conflict);
            }
        }
        if (conflict_at_root) {
            rep.root_conflict = culprit;
            rep.definitions_inconsistent = !culprit;
            trace(culprit ? "root conflict: " + th_.str(th_.constraints[*culprit])
                          : std::string("root conflict: the definitions have no two-valued model"));
            rep.complete = true;
            stats_.pruned = 1;
            finish(rep, start);
            return rep;
        }

        struct Frame { std::size_t trail; std::uint32_t var; bool second; };
        std::vector<Frame> frames;
        bool limit = false;
        for (;;) {
            // Descend: decide until a conflict or a full assignment.
            bool backtrack = false;
            std::uint32_t v = pick();
            if (v == UINT32_MAX) {
                leaf(rep);
                if (opts_.max_models && !opts_.minimal_only && rep.solutions.size() >= *opts_.max_models) {
                    limit = true;
                    break;
                }
                backtrack = true;
            }
            else {
                ++stats_.nodes;
                frames.push_back({trail_.size(), v, false});
                trace_decision(v, true, frames.size());
                assign(make_lit(v, false), kNoReason);
                if (propagate() != kNoReason) {
                    ++stats_.pruned;
                    backtrack = true;
                }
            }
            while (backtrack) {
                if (frames.empty()) break;
                Frame& f = frames.back();
                undo_to(f.trail);
                if (f.second) {
                    frames.pop_back();
                    continue;
                }
                f.second = true;
                ++stats_.nodes;
                trace_decision(f.var, false, frames.size());
                assign(make_lit(f.var, true), kNoReason);
                if (propagate() != kNoReason) {
                    ++stats_.pruned;
                    continue;
                }
                backtrack = false;
            }
            if (backtrack) break;
        }
        rep.complete = !limit;
        finish(rep, start);
        return rep;
    }

private:
    struct Clause {
        std::vector<Lit> lits;
        std::uint32_t origin; // constraint index, or kNoConstraint for completion clauses
    };

    const GroundTheory& th_;
    const SolveOptions& opts_;
    DeltaChecker checker_;
    SolveStats stats_;

    std::uint32_t nvars_ = 0;
    std::uint32_t aux_ = 0;
    std::uint32_t total_vars_ = 0;
    std::vector<AtomId> candidates_;
    std::vector<std::uint32_t> decision_vars_;

    std::vector<Clause> clauses_;
    std::vector<std::pair<Lit, std::uint32_t>> units_;
    std::uint32_t empty_constraint_ = kNoConstraint;

    std::vector<std::int8_t> value_;
    std::vector<std::uint32_t> reason_;
    std::vector<std::uint32_t> root_origin_; // constraint behind a root unit
    std::vector<Lit> trail_;
    std::size_t qhead_ = 0;
    std::vector<std::vector<std::uint32_t>> watches_;

    // Branching score: occurrences in constraint clauses not yet satisfied.
    std::vector<std::uint32_t> occ_;
    std::vector<std::vector<std::uint32_t>> occ_lists_;
    std::vector<std::uint32_t> sat_count_;

    std::int8_t value(Lit l) const {
        std::int8_t v = value_[var_of(l)];
        return is_neg(l) ? static_cast<std::int8_t>(-v) : v;
    }

    void add_clause(std::vector<Lit> lits, std::uint32_t origin) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i + 1] == flip(lits[i])) return; // tautology
        if (lits.empty()) {
            if (origin != kNoConstraint && empty_constraint_ == kNoConstraint) empty_constraint_ = origin;
            return;
        }
        if (lits.size() == 1) {
            units_.push_back({lits[0], origin});
            return;
        }
        clauses_.push_back({std::move(lits), origin});
    }

    // Clark completion of the definitions; bodies with more than one literal
    // get an auxiliary variable.
    void encode_completion(const std::vector<bool>& cand) {
        std::vector<std::vector<std::uint32_t>> by_head(nvars_);
        for (std::uint32_t i = 0; i < th_.clauses.size(); ++i) by_head[index(th_.clauses[i].head)].push_back(i);
        for (std::uint32_t a = 0; a < nvars_; ++a) {
            if (th_.atoms.is_abducible(atom_id(a))) {
                if (!cand[a]) add_clause({make_lit(a, true)}, kNoConstraint);
                continue;
            }
            std::vector<Lit> support{make_lit(a, true)};
            bool fact = false;
            for (std::uint32_t ci : by_head[a]) {
                const GroundClause& c = th_.clauses[ci];
                std::vector<Lit> body;
                for (AtomId p : c.pos) body.push_back(make_lit(index(p), false));
                for (AtomId n : c.neg) body.push_back(make_lit(index(n), true));
                if (body.empty()) {
                    fact = true;
                    break;
                }
                Lit b;
                if (body.size() == 1) b = body[0];
                else {
                    std::uint32_t x = nvars_ + aux_++;
                    b = make_lit(x, false);
                    std::vector<Lit> def{b};
                    for (Lit l : body) {
                        add_clause({flip(b), l}, kNoConstraint);
                        def.push_back(flip(l));
                    }
                    add_clause(std::move(def), kNoConstraint);
                }
                add_clause({flip(b), make_lit(a, false)}, kNoConstraint);
                support.push_back(b);
            }
            if (fact) add_clause({make_lit(a, false)}, kNoConstraint);
            else add_clause(std::move(support), kNoConstraint);
        }
    }

    // Without the completion only constraints over abducibles are sound to
    // propagate, since defined atoms may stay undefined.
    void encode_constraints(bool completion) {
        for (std::uint32_t ci = 0; ci < th_.constraints.size(); ++ci) {
            const GroundConstraint& c = th_.constraints[ci];
            bool abducible_only = true;
            std::vector<Lit> lits;
            for (const auto& h : c.heads) {
                lits.push_back(make_lit(index(h.atom), !h.positive));
                abducible_only = abducible_only && th_.atoms.is_abducible(h.atom);
            }
            for (AtomId p : c.pos) {
                lits.push_back(make_lit(index(p), true));
                abducible_only = abducible_only && th_.atoms.is_abducible(p);
            }
            for (AtomId n : c.neg) {
                lits.push_back(make_lit(index(n), false));
                abducible_only = abducible_only && th_.atoms.is_abducible(n);
            }
            if (!completion && !abducible_only) continue;
            add_clause(std::move(lits), ci);
        }
    }

    void assign(Lit l, std::uint32_t reason) {
        std::uint32_t v = var_of(l);
        value_[v] = is_neg(l) ? -1 : 1;
        reason_[v] = reason;
        trail_.push_back(l);
        if (reason != kNoReason) ++stats_.propagations;
        for (std::uint32_t ci : occ_lists_[v]) {
            if (std::find(clauses_[ci].lits.begin(), clauses_[ci].lits.end(), l) == clauses_[ci].lits.end()) continue;
            if (sat_count_[ci]++ == 0)
                for (Lit x : clauses_[ci].lits) --occ_[var_of(x)];
        }
    }

    void undo_to(std::size_t size) {
        while (trail_.size() > size) {
            Lit l = trail_.back();
            trail_.pop_back();
            std::uint32_t v = var_of(l);
            for (std::uint32_t ci : occ_lists_[v]) {
                if (std::find(clauses_[ci].lits.begin(), clauses_[ci].lits.end(), l) == clauses_[ci].lits.end()) continue;
                if (--sat_count_[ci] == 0)
                    for (Lit x : clauses_[ci].lits) ++occ_[var_of(x)];
            }
            value_[v] = 0;
            reason_[v] = kNoReason;
        }
        qhead_ = std::min(qhead_, trail_.size());
    }

    // Two-watched-literal unit propagation; returns a conflicting clause.
    std::uint32_t propagate() {
        while (qhead_ < trail_.size()) {
            Lit falsified = flip(trail_[qhead_++]);
            auto& ws = watches_[falsified];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                std::uint32_t ci = ws[i];
                auto& lits = clauses_[ci].lits;
                if (lits[0] == falsified) std::swap(lits[0], lits[1]);
                if (value(lits[0]) == 1) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (value(lits[k]) != -1) {
                        std::swap(lits[1], lits[k]);
                        watches_[lits[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = ci;
                if (value(lits[0]) == -1) {
                    for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    return ci;
                }
                assign(lits[0], ci);
            }
            ws.resize(keep);
        }
        return kNoReason;
    }

    // Constraint responsible for a root-level conflict: the clause itself if
    // it stems from a constraint, else the first constraint among its reasons.
    std::optional<std::size_t> explain(std::uint32_t conflict) {
        std::vector<std::uint32_t> queue{conflict};
        std::unordered_set<std::uint32_t> seen{conflict};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const Clause& c = clauses_[queue[i]];
            if (c.origin != kNoConstraint) return c.origin;
            for (Lit l : c.lits) {
                std::uint32_t v = var_of(l);
                if (reason_[v] == kNoReason) {
                    if (root_origin_[v] != kNoConstraint) return root_origin_[v];
                }
                else if (seen.insert(reason_[v]).second) {
                    queue.push_back(reason_[v]);
                }
            }
        }
        return std::nullopt;
    }

    std::uint32_t pick() const {
        std::uint32_t best = UINT32_MAX;
        for (std::uint32_t v : decision_vars_) {
            if (value_[v] != 0) continue;
            if (best == UINT32_MAX || occ_[v] > occ_[best]) best = v;
        }
        return best;
    }

    void leaf(SolveReport& rep) {
        Delta delta;
        for (AtomId a : candidates_)
            if (value_[index(a)] == 1) delta.push_back(a);
        ++stats_.constraint_checks;
        CheckResult r = checker_.check(delta, opts_.require_two_valued);
        if (!r.sat()) {
            ++stats_.rejected_leaves;
            if (opts_.trace) trace("leaf rejected");
            return;
        }
        if (opts_.trace) trace("solution " + std::to_string(rep.solutions.size() + 1));
        rep.solutions.push_back(std::move(delta));
    }

    void trace(const std::string& msg) const {
        if (opts_.trace) opts_.trace(msg);
    }

    void trace_decision(std::uint32_t v, bool positive, std::size_t depth) const {
        if (!opts_.trace) return;
        opts_.trace(std::string(depth, ' ') + (positive ? "+" : "-") + th_.atoms.str(atom_id(v)));
    }

    void finish(SolveReport& rep, std::chrono::steady_clock::time_point start) {
        stats_.wall_time = std::chrono::steady_clock::now() - start;
        rep.stats = stats_;
    }
};

} // namespace

SolveReport solve(const GroundTheory& theory, const SolveOptions& opts) {
    Search s(theory, opts);
    SolveReport rep = s.run();
    if (opts.minimal_only) {
        rep.solutions = minimal_solutions(rep.solutions);
        if (opts.max_models && rep.solutions.size() > *opts.max_models) {
            rep.solutions.resize(*opts.max_models);
            rep.complete = false;
        }
    }
    return rep;
}

std::vector<Delta> minimal_solutions(const std::vector<Delta>& solutions) {
    std::vector<std::vector<AtomId>> sorted;
    sorted.reserve(solutions.size());
    for (const auto& s : solutions) {
        auto c = s;
        std::sort(c.begin(), c.end());
        sorted.push_back(std::move(c));
    }
    std::vector<Delta> out;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < solutions.size() && minimal; ++j) {
            if (i == j || sorted[j].size() >= sorted[i].size()) continue;
            if (std::includes(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end())) minimal = false;
        }
        if (minimal) out.push_back(solutions[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Queries.

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
    if (!used.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string n = base + std::to_string(i);
        if (!used.count(n)) return n;
    }
}

std::set<std::string> used_names(const Program& p) {
    std::set<std::string> used;
    for (const auto& a : p.decls.abducibles) used.insert(a.predicate);
    for (const auto& c : p.decls.constants) used.insert(c.name);
    for (const auto& d : p.decls.domains) used.insert(d.name);
    auto lit = [&](const Literal& l) {
        if (!l.is_builtin()) used.insert(l.atom.predicate);
    };
    for (const auto& c : p.definitions) {
        used.insert(c.head.predicate);
        for (const auto& l : c.body) lit(l);
    }
    for (const auto& c : p.constraints) {
        for (const auto& l : c.heads) lit(l);
        for (const auto& l : c.body) lit(l);
    }
    return used;
}

// Unary predicates that bound argument `i` of `pred/arity`.
std::vector<std::string> argument_types(const Program& p, const std::string& pred, std::size_t arity, std::size_t i) {
    std::vector<std::string> out;
    if (const auto* a = p.decls.find_abducible(pred, static_cast<std::uint32_t>(arity)); a && !a->arg_types.empty()) {
        out.push_back(a->arg_types[i]);
        return out;
    }
    for (const auto& c : p.constraints) {
        if (c.heads.size() != 1 || c.body.size() != 1) continue;
        const Literal& h = c.heads[0];
        const Literal& b = c.body[0];
        if (h.kind != Literal::Kind::Positive || b.kind != Literal::Kind::Positive) continue;
        if (b.atom.predicate != pred || b.atom.arity() != arity) continue;
        if (h.atom.arity() != 1 || !h.atom.args[0].is_var() || !b.atom.args[i].is_var()) continue;
        if (h.atom.args[0].as_var()->name == b.atom.args[i].as_var()->name) out.push_back(h.atom.predicate);
    }
    return out;
}

} // namespace

QueryTranslation translate_query(const std::vector<Atom>& query, const Program& program) {
    QueryTranslation out{program, "", ""};
    if (query.empty()) return out;

    std::vector<std::string> vars;
    for (const auto& a : query)
        for (const auto& t : a.args) t.collect_vars(vars);
    std::vector<std::vector<std::string>> types(vars.size());
    for (const auto& a : query) {
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (!a.args[i].is_var()) continue;
            std::size_t v = static_cast<std::size_t>(
                std::find(vars.begin(), vars.end(), a.args[i].as_var()->name) - vars.begin());
            for (auto& d : argument_types(program, a.predicate, a.arity(), i))
                if (std::find(types[v].begin(), types[v].end(), d) == types[v].end()) types[v].push_back(d);
        }
    }
    for (std::size_t v = 0; v < vars.size(); ++v)
        if (types[v].empty()) throw Error("cannot infer a domain for query variable " + vars[v]);

    auto used = used_names(program);
    out.answer = fresh_name("x", used);
    used.insert(out.answer);
    out.answer_any = fresh_name("x_found", used);

    Atom answer{out.answer, {}, {}};
    for (const auto& v : vars) answer.args.push_back(Term::var(v));
    Program& p = out.program;
    p.decls.abducibles.push_back({out.answer, static_cast<std::uint32_t>(vars.size()), {}, {}});
    for (std::size_t v = 0; v < vars.size(); ++v)
        for (const auto& d : types[v])
            p.constraints.push_back({{Literal::pos(Atom{d, {Term::var(vars[v])}, {}})}, {Literal::pos(answer)}, {}});
    for (const auto& q : query) p.constraints.push_back({{Literal::pos(q)}, {Literal::pos(answer)}, {}});
    p.definitions.push_back({Atom{out.answer_any, {}, {}}, {Literal::pos(answer)}, {}});
    p.constraints.push_back({{Literal::pos(Atom{out.answer_any, {}, {}})}, {}, {}});
    return out;
}

std::vector<Delta> withhold(const GroundTheory& theory, const std::vector<Delta>& solutions,
                            const std::vector<std::string>& predicates) {
    std::vector<Delta> out;
    std::set<Delta> seen;
    for (const auto& s : solutions) {
        Delta d;
        for (AtomId a : s) {
            const auto& name = theory.atoms.pred(theory.atoms.atom(a).pred).name;
            if (std::find(predicates.begin(), predicates.end(), name) == predicates.end()) d.push_back(a);
        }
        if (seen.insert(d).second) out.push_back(std::move(d));
    }
    return out;
}

} // namespace alp
