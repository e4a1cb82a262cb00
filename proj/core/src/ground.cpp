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
#include <alp/wfs.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

namespace alp {

const std::vector<Value>* DomainTable::domain(const std::string& name) const {
    auto it = domains.find(name);
    return it == domains.end() ? nullptr : &it->second;
}

const std::int64_t* DomainTable::constant(const std::string& name) const {
    auto it = constants.find(name);
    return it == constants.end() ? nullptr : &it->second;
}

namespace {

constexpr std::size_t kMaxGroundAtoms = 4'000'000;

std::int64_t arith(ArithOp op, std::int64_t a, std::int64_t b, const char* where) {
    std::int64_t r = 0;
    bool ovf = false;
    switch (op) {
    case ArithOp::Add: ovf = __builtin_add_overflow(a, b, &r); break;
    case ArithOp::Sub: ovf = __builtin_sub_overflow(a, b, &r); break;
    case ArithOp::Mul: ovf = __builtin_mul_overflow(a, b, &r); break;
    case ArithOp::Abs:
        ovf = a == std::numeric_limits<std::int64_t>::min();
        r = a < 0 ? -a : a;
        break;
    }
    if (ovf) throw Error(std::string("integer overflow in ") + where);
    return r;
}

// ---------------------------------------------------------------------------
// Compiled terms: variables resolved to slots, named constants to values.

struct CTerm {
    enum class Kind : std::uint8_t { Const, Var, Arith };
    Kind kind = Kind::Const;
    Value value;
    std::uint32_t slot = 0;
    ArithOp op = ArithOp::Add;
    std::vector<CTerm> args;

    void slots(std::vector<std::uint32_t>& out) const {
        if (kind == Kind::Var) {
            if (std::find(out.begin(), out.end(), slot) == out.end()) out.push_back(slot);
        }
        for (const auto& a : args) a.slots(out);
    }
};

struct VarMap {
    std::vector<std::string> names;
    std::uint32_t slot(const std::string& n) {
        for (std::uint32_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return i;
        names.push_back(n);
        return static_cast<std::uint32_t>(names.size() - 1);
    }
};

struct Env {
    std::vector<Value> vals;
    std::vector<std::uint8_t> bound;
    explicit Env(std::size_t n) : vals(n), bound(n, 0) {}
    bool all_bound(const std::vector<std::uint32_t>& s) const {
        for (auto i : s)
            if (!bound[i]) return false;
        return true;
    }
};

CTerm compile_term(const Term& t, VarMap& vm, const DomainTable* dt) {
    CTerm c;
    std::visit([&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
            c.kind = CTerm::Kind::Var;
            c.slot = vm.slot(n.name);
        }
        else if constexpr (std::is_same_v<T, IntConst>) {
            c.value = Value(n.value);
        }
        else if constexpr (std::is_same_v<T, SymConst>) {
            const std::int64_t* k = dt ? dt->constant(n.name) : nullptr;
            c.value = k ? Value(*k) : Value::symbol(n.name);
        }
        else {
            c.kind = CTerm::Kind::Arith;
            c.op = n.op;
            for (const auto& a : n.args) c.args.push_back(compile_term(a, vm, dt));
        }
    }, t.node);
    return c;
}

Value eval(const CTerm& t, const Env& env) {
    switch (t.kind) {
    case CTerm::Kind::Const: return t.value;
    case CTerm::Kind::Var: return env.vals[t.slot];
    case CTerm::Kind::Arith: {
        std::int64_t v[2] = {0, 0};
        for (std::size_t i = 0; i < t.args.size() && i < 2; ++i) {
            Value a = eval(t.args[i], env);
            if (!a.is_int()) throw Error("arithmetic on non-integer value '" + a.str() + "'");
            v[i] = a.as_int();
        }
        return Value(arith(t.op, v[0], v[1], "arithmetic expression"));
    }
    }
    return {};
}

bool compare(CompareOp op, const Value& a, const Value& b) {
    switch (op) {
    case CompareOp::Eq: return a == b;
    case CompareOp::Neq: return a != b;
    case CompareOp::Lt: return a < b;
    case CompareOp::Gt: return a > b;
    case CompareOp::Le: return a <= b;
    case CompareOp::Ge: return a >= b;
    case CompareOp::In: break;
    }
    return false;
}

std::int64_t int_of(const Value& v, const char* what) {
    if (!v.is_int()) throw Error(std::string("non-integer bound '") + v.str() + "' in " + what);
    return v.as_int();
}

struct CBuiltin {
    CompareOp op = CompareOp::Eq;
    CTerm lhs, rhs;
    std::optional<CTerm> hi;
    std::vector<std::uint32_t> vars;

    bool test(const Env& env) const {
        Value l = eval(lhs, env);
        if (op == CompareOp::In) {
            if (!l.is_int()) return false;
            return int_of(eval(rhs, env), "range") <= l.as_int() && l.as_int() <= int_of(eval(*hi, env), "range");
        }
        return compare(op, l, eval(rhs, env));
    }

    // Generator mode: the left operand is a variable that is still unbound.
    std::optional<std::uint32_t> generator_slot(const Env& env) const {
        if (lhs.kind != CTerm::Kind::Var || env.bound[lhs.slot]) return std::nullopt;
        if (op != CompareOp::In && op != CompareOp::Eq) return std::nullopt;
        std::vector<std::uint32_t> rest;
        rhs.slots(rest);
        if (hi) hi->slots(rest);
        if (std::find(rest.begin(), rest.end(), lhs.slot) != rest.end()) return std::nullopt;
        if (!env.all_bound(rest)) return std::nullopt;
        return lhs.slot;
    }

    template <class F>
    void generate(Env& env, F&& f) const {
        std::uint32_t s = lhs.slot;
        env.bound[s] = 1;
        if (op == CompareOp::Eq) {
            env.vals[s] = eval(rhs, env);
            f();
        }
        else {
            std::int64_t lo = int_of(eval(rhs, env), "range");
            std::int64_t up = int_of(eval(*hi, env), "range");
            for (std::int64_t v = lo; v <= up; ++v) {
                env.vals[s] = Value(v);
                f();
            }
        }
        env.bound[s] = 0;
    }
};

CBuiltin compile_builtin(const Builtin& b, VarMap& vm, const DomainTable* dt) {
    CBuiltin c{b.op, compile_term(b.lhs, vm, dt), compile_term(b.rhs, vm, dt), std::nullopt, {}};
    if (b.hi) c.hi = compile_term(*b.hi, vm, dt);
    c.lhs.slots(c.vars);
    c.rhs.slots(c.vars);
    if (c.hi) c.hi->slots(c.vars);
    return c;
}

// ---------------------------------------------------------------------------
// Compiled rules.

struct CLit {
    Literal::Kind kind = Literal::Kind::Positive;
    PredId pred{};
    std::vector<CTerm> args;
    CBuiltin builtin;
    std::vector<std::uint32_t> vars;
    const Literal* src = nullptr;
};

enum class StepKind : std::uint8_t { Match, Test, Gen, Neg };

struct Step {
    StepKind kind;
    std::uint32_t lit;
};

struct CRule {
    std::vector<CLit> body;
    std::vector<Step> plan;
    PredId head_pred{};
    std::vector<CTerm> head_args;
    bool head_arith = false;
    std::vector<CLit> heads; // constraints
    std::size_t nvars = 0;
    std::vector<std::string> names;
    std::string text;
    SourceSpan span;
};

struct PairHash {
    std::size_t operator()(const GroundClause& c) const {
        std::size_t h = index(c.head) * 0x9e3779b97f4a7c15ull;
        for (AtomId a : c.pos) h = (h ^ index(a)) * 0x100000001b3ull;
        h ^= 0xabcdefull;
        for (AtomId a : c.neg) h = (h ^ index(a)) * 0x100000001b3ull;
        return h;
    }
    std::size_t operator()(const GroundConstraint& c) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (const auto& l : c.heads) h = (h ^ (index(l.atom) * 2 + l.positive)) * 0x100000001b3ull;
        h ^= 0x1234ull;
        for (AtomId a : c.pos) h = (h ^ index(a)) * 0x100000001b3ull;
        h ^= 0xabcdefull;
        for (AtomId a : c.neg) h = (h ^ index(a)) * 0x100000001b3ull;
        return h;
    }
};

struct ConstraintKey {
    bool operator()(const GroundConstraint& a, const GroundConstraint& b) const {
        return a.heads == b.heads && a.pos == b.pos && a.neg == b.neg;
    }
};

class Grounder {
public:
    Grounder(const Program& p, const DomainTable& dt, AtomTable& atoms)
        : prog_(p), dt_(dt), atoms_(atoms), cls_(classify_predicates(p)) {
        for (const auto& [key, kind] : cls_) {
            if (kind == PredicateKind::Builtin) continue;
            atoms_.predicate(key.name, key.arity, kind == PredicateKind::Abducible);
        }
        compute_base_predicates();
        compute_horizon();
    }

    const Classification& classification() const { return cls_; }
    bool is_base(PredId p) const { return index(p) < base_.size() && base_[index(p)]; }
    bool is_base(const PredicateKey& k) const {
        auto p = atoms_.find_predicate(k.name, k.arity);
        return p && is_base(*p);
    }
    PredId pred_of(const std::string& name, std::uint32_t arity) const { return *atoms_.find_predicate(name, arity); }

    std::vector<std::vector<AtomId>>& ext() { return ext_; }
    AtomSet& possible() { return possible_; }

    // Domain declarations define unary facts.
    void add_domain_facts(std::vector<GroundClause>& out) {
        for (const auto& d : prog_.decls.domains) {
            PredId p = pred_of(d.name, 1);
            for (const auto& v : *dt_.domain(d.name)) {
                AtomId a = atoms_.intern(p, {v});
                out.push_back({a, {}, {}});
                mark_possible(a, p);
            }
        }
    }

    void mark_possible(AtomId a, PredId p) {
        if (possible_.insert(a)) {
            if (ext_.size() <= index(p)) ext_.resize(index(p) + 1);
            ext_[index(p)].push_back(a);
        }
    }

    CRule compile_clause(const Clause& c) {
        CRule r;
        VarMap vm;
        r.text = to_string(c);
        r.span = c.span;
        compile_body(r, c.body, vm);
        r.head_pred = pred_of(c.head.predicate, c.head.arity());
        std::vector<std::uint32_t> hv;
        for (const auto& t : c.head.args) {
            r.head_args.push_back(compile_term(t, vm, &dt_));
            r.head_args.back().slots(hv);
            if (t.is_arith()) r.head_arith = true;
        }
        r.names = vm.names;
        r.nvars = vm.names.size();
        plan(r, hv);
        return r;
    }

    CRule compile_constraint(const Constraint& c) {
        CRule r;
        VarMap vm;
        r.text = to_string(c);
        r.span = c.span;
        compile_body(r, c.body, vm);
        std::vector<std::uint32_t> hv;
        for (const auto& h : c.heads) {
            r.heads.push_back(compile_lit(h, vm));
            for (auto s : r.heads.back().vars)
                if (std::find(hv.begin(), hv.end(), s) == hv.end()) hv.push_back(s);
        }
        r.names = vm.names;
        r.nvars = vm.names.size();
        plan(r, hv);
        return r;
    }

    // Runs the join plan; `emit` sees the full binding plus the ground atoms of
    // the positive and negative body literals.
    template <class Emit>
    void run(const CRule& r, Emit&& emit) {
        Env env(r.nvars);
        std::vector<AtomId> pos, neg;
        step(r, 0, env, pos, neg, emit);
    }

    // Ground atom of a literal whose variables are all bound. Interns if asked,
    // otherwise returns nullopt for atoms not in the table.
    std::optional<AtomId> ground_atom(const CLit& l, const Env& env, bool intern) {
        std::vector<Value> args;
        args.reserve(l.args.size());
        for (const auto& t : l.args) args.push_back(eval(t, env));
        if (intern) return atoms_.intern(l.pred, std::move(args));
        return atoms_.find(GroundAtom{l.pred, std::move(args)});
    }

    std::optional<AtomId> ground_head(const CRule& r, const Env& env) {
        std::vector<Value> args;
        args.reserve(r.head_args.size());
        for (const auto& t : r.head_args) {
            Value v = eval(t, env);
            if (r.head_arith && v.is_int() && t.kind == CTerm::Kind::Arith &&
                (v.as_int() < horizon_lo_ || v.as_int() > horizon_hi_))
                return std::nullopt;
            args.push_back(std::move(v));
        }
        AtomId a = atoms_.intern(r.head_pred, std::move(args));
        if (atoms_.size() > kMaxGroundAtoms) throw Error("grounding exceeds " + std::to_string(kMaxGroundAtoms) + " atoms");
        return a;
    }

    // Fixpoint instantiation of a set of clauses.
    void ground_clauses(const std::vector<CRule>& rules, std::vector<GroundClause>& out) {
        std::unordered_set<GroundClause, PairHash> seen(out.begin(), out.end());
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : rules) {
                run(r, [&](const Env& env, const std::vector<AtomId>& pos, const std::vector<AtomId>& neg) {
                    auto h = ground_head(r, env);
                    if (!h) return;
                    GroundClause gc{*h, pos, neg};
                    if (!seen.insert(gc).second) return;
                    out.push_back(std::move(gc));
                    if (!possible_.contains(*h)) {
                        mark_possible(*h, r.head_pred);
                        changed = true;
                    }
                });
            }
        }
    }

    std::int64_t horizon_lo() const { return horizon_lo_; }
    std::int64_t horizon_hi() const { return horizon_hi_; }

    bool candidate(AtomId a) const { return candidates_.contains(a); }
    void set_candidates(const std::vector<AtomId>& c) {
        for (AtomId a : c) {
            candidates_.insert(a);
            mark_possible(a, atoms_.atom(a).pred);
        }
    }

private:
    const Program& prog_;
    const DomainTable& dt_;
    AtomTable& atoms_;
    Classification cls_;
    std::vector<bool> base_;
    std::vector<std::vector<AtomId>> ext_;
    AtomSet possible_;
    AtomSet candidates_;
    std::int64_t horizon_lo_ = 0;
    std::int64_t horizon_hi_ = 0;

    void compute_base_predicates() {
        // A defined predicate belongs to the base fragment iff none of its
        // clauses reaches an abducible.
        std::set<PredicateKey> dependent;
        for (const auto& [k, kind] : cls_)
            if (kind == PredicateKind::Abducible) dependent.insert(k);
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& c : prog_.definitions) {
                PredicateKey h{c.head.predicate, c.head.arity()};
                if (dependent.count(h)) continue;
                for (const auto& l : c.body) {
                    if (l.is_builtin()) continue;
                    if (dependent.count({l.atom.predicate, l.atom.arity()})) {
                        dependent.insert(h);
                        changed = true;
                        break;
                    }
                }
            }
        }
        base_.assign(atoms_.num_predicates(), false);
        for (std::size_t i = 0; i < atoms_.num_predicates(); ++i) {
            const Predicate& p = atoms_.pred(static_cast<PredId>(i));
            base_[i] = !p.abducible && !dependent.count({p.name, p.arity});
        }
    }

    // Values computed by head arithmetic are kept within the integers the
    // program mentions, so recursive definitions such as a frame axiom stay
    // finite.
    void compute_horizon() {
        bool any = false;
        auto note = [&](std::int64_t v) {
            if (!any) { horizon_lo_ = horizon_hi_ = v; any = true; }
            horizon_lo_ = std::min(horizon_lo_, v);
            horizon_hi_ = std::max(horizon_hi_, v);
        };
        std::function<void(const Term&)> term = [&](const Term& t) {
            if (auto* i = std::get_if<IntConst>(&t.node)) note(i->value);
            else if (auto* s = std::get_if<SymConst>(&t.node)) {
                if (auto* k = dt_.constant(s->name)) note(*k);
            }
            else if (auto* e = std::get_if<ArithExpr>(&t.node)) {
                // Only leaves count; arithmetic results are what is being bounded.
                for (const auto& a : e->args)
                    if (!a.is_arith()) term(a);
            }
        };
        auto lit = [&](const Literal& l) {
            if (l.is_builtin()) {
                term(l.builtin.lhs);
                term(l.builtin.rhs);
                if (l.builtin.hi) term(*l.builtin.hi);
            }
            else {
                for (const auto& t : l.atom.args) term(t);
            }
        };
        for (const auto& c : prog_.definitions) {
            for (const auto& t : c.head.args) term(t);
            for (const auto& l : c.body) lit(l);
        }
        for (const auto& c : prog_.constraints) {
            for (const auto& l : c.heads) lit(l);
            for (const auto& l : c.body) lit(l);
        }
        for (const auto& [n, v] : dt_.constants) note(v);
        for (const auto& [n, vals] : dt_.domains)
            for (const auto& v : vals)
                if (v.is_int()) note(v.as_int());
    }

    CLit compile_lit(const Literal& l, VarMap& vm) {
        CLit c;
        c.kind = l.kind;
        c.src = &l;
        if (l.is_builtin()) {
            c.builtin = compile_builtin(l.builtin, vm, &dt_);
            c.vars = c.builtin.vars;
        }
        else {
            c.pred = pred_of(l.atom.predicate, l.atom.arity());
            for (const auto& t : l.atom.args) {
                c.args.push_back(compile_term(t, vm, &dt_));
                c.args.back().slots(c.vars);
            }
        }
        return c;
    }

    void compile_body(CRule& r, const std::vector<Literal>& body, VarMap& vm) {
        for (const auto& l : body) r.body.push_back(compile_lit(l, vm));
    }

    // Static join order: ready tests and negations first, then generators,
    // then the next positive atom in source order.
    void plan(CRule& r, const std::vector<std::uint32_t>& headVars) {
        std::vector<bool> done(r.body.size(), false);
        Env env(r.nvars);
        std::size_t left = r.body.size();
        auto bound_all = [&](const std::vector<std::uint32_t>& vs) { return env.all_bound(vs); };
        while (left) {
            bool progressed = false;
            for (std::uint32_t i = 0; i < r.body.size() && !progressed; ++i) {
                if (done[i]) continue;
                const CLit& l = r.body[i];
                if ((l.kind == Literal::Kind::Builtin || l.kind == Literal::Kind::Negative) && bound_all(l.vars)) {
                    r.plan.push_back({l.kind == Literal::Kind::Builtin ? StepKind::Test : StepKind::Neg, i});
                    done[i] = progressed = true;
                }
            }
            for (std::uint32_t i = 0; i < r.body.size() && !progressed; ++i) {
                if (done[i] || r.body[i].kind != Literal::Kind::Builtin) continue;
                if (auto s = r.body[i].builtin.generator_slot(env)) {
                    r.plan.push_back({StepKind::Gen, i});
                    env.bound[*s] = 1;
                    done[i] = progressed = true;
                }
            }
            for (std::uint32_t i = 0; i < r.body.size() && !progressed; ++i) {
                if (done[i] || r.body[i].kind != Literal::Kind::Positive) continue;
                r.plan.push_back({StepKind::Match, i});
                for (auto s : r.body[i].vars) env.bound[s] = 1;
                done[i] = progressed = true;
            }
            if (!progressed) {
                for (std::uint32_t i = 0; i < r.body.size(); ++i) {
                    if (done[i]) continue;
                    for (auto s : r.body[i].vars)
                        if (!env.bound[s])
                            throw Error("unbounded variable " + var_name(r, s) + " in '" + r.text + "'", r.span);
                }
                throw Error("cannot order body of '" + r.text + "'", r.span);
            }
            --left;
        }
        for (auto s : headVars)
            if (!env.bound[s]) throw Error("unbounded variable " + var_name(r, s) + " in head of '" + r.text + "'", r.span);
    }

    static std::string var_name(const CRule& r, std::uint32_t slot) {
        return slot < r.names.size() ? r.names[slot] : "_" + std::to_string(slot);
    }

    template <class Emit>
    void step(const CRule& r, std::size_t k, Env& env, std::vector<AtomId>& pos, std::vector<AtomId>& neg, Emit& emit) {
        if (k == r.plan.size()) {
            emit(static_cast<const Env&>(env), static_cast<const std::vector<AtomId>&>(pos),
                 static_cast<const std::vector<AtomId>&>(neg));
            return;
        }
        const Step& s = r.plan[k];
        const CLit& l = r.body[s.lit];
        switch (s.kind) {
        case StepKind::Test:
            if (l.builtin.test(env)) step(r, k + 1, env, pos, neg, emit);
            return;
        case StepKind::Gen:
            l.builtin.generate(env, [&] { step(r, k + 1, env, pos, neg, emit); });
            return;
        case StepKind::Neg: {
            bool abd = atoms_.pred(l.pred).abducible;
            auto a = ground_atom(l, env, !abd);
            if (abd && (!a || !candidate(*a))) {
                step(r, k + 1, env, pos, neg, emit);
                return;
            }
            neg.push_back(*a);
            step(r, k + 1, env, pos, neg, emit);
            neg.pop_back();
            return;
        }
        case StepKind::Match: {
            if (index(l.pred) >= ext_.size()) return;
            std::size_t n = ext_[index(l.pred)].size();
            std::vector<std::uint32_t> newly(l.args.size());
            for (std::size_t i = 0; i < n; ++i) {
                AtomId a = ext_[index(l.pred)][i];
                const GroundAtom& ga = atoms_.atom(a);
                std::size_t nb = 0;
                bool ok = true;
                for (std::size_t j = 0; j < l.args.size() && ok; ++j) {
                    const CTerm& t = l.args[j];
                    if (t.kind == CTerm::Kind::Var) {
                        if (env.bound[t.slot]) ok = env.vals[t.slot] == ga.args[j];
                        else {
                            env.bound[t.slot] = 1;
                            env.vals[t.slot] = ga.args[j];
                            newly[nb++] = t.slot;
                        }
                    }
                    else {
                        ok = eval(t, env) == ga.args[j];
                    }
                }
                if (ok) {
                    pos.push_back(a);
                    step(r, k + 1, env, pos, neg, emit);
                    pos.pop_back();
                }
                for (std::size_t j = 0; j < nb; ++j) env.bound[newly[j]] = 0;
            }
            return;
        }
        }
    }
};

// Tarjan's SCC over the atom dependency graph; false if some negative edge
// stays inside a component.
bool locally_stratified(std::size_t atoms, const std::vector<GroundClause>& clauses) {
    std::vector<std::vector<std::pair<std::uint32_t, bool>>> adj(atoms);
    for (const auto& c : clauses) {
        for (AtomId b : c.pos) adj[index(c.head)].push_back({index(b), false});
        for (AtomId b : c.neg) adj[index(c.head)].push_back({index(b), true});
    }
    constexpr std::uint32_t kUnvisited = UINT32_MAX;
    std::vector<std::uint32_t> idx(atoms, kUnvisited), low(atoms, 0), comp(atoms, kUnvisited);
    std::vector<std::uint8_t> onStack(atoms, 0);
    std::vector<std::uint32_t> stack;
    std::uint32_t counter = 0, ncomp = 0;
    struct Frame { std::uint32_t v; std::size_t edge; };
    std::vector<Frame> call;
    for (std::uint32_t root = 0; root < atoms; ++root) {
        if (idx[root] != kUnvisited) continue;
        call.push_back({root, 0});
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                std::uint32_t w = adj[f.v][f.edge++].first;
                if (idx[w] == kUnvisited) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = 1;
                    call.push_back({w, 0});
                }
                else if (onStack[w]) {
                    low[f.v] = std::min(low[f.v], idx[w]);
                }
                continue;
            }
            std::uint32_t v = f.v;
            if (low[v] == idx[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    for (std::uint32_t v = 0; v < atoms; ++v)
        for (auto [w, negative] : adj[v])
            if (negative && comp[v] == comp[w]) return false;
    return true;
}

std::string join_atoms(const AtomTable& t, const std::vector<AtomId>& xs, const char* prefix) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!s.empty()) s += ", ";
        s += prefix + t.str(xs[i]);
    }
    return s;
}

} // namespace

// ---------------------------------------------------------------------------

DomainTable eval_declarations(const Declarations& decls, const ConstantOverrides& overrides) {
    DomainTable out;
    std::map<std::string, const ConstantDecl*> defs;
    for (const auto& c : decls.constants) {
        if (!defs.emplace(c.name, &c).second) throw Error("constant " + c.name + " declared twice", c.span);
    }
    for (const auto& [name, v] : overrides)
        if (!defs.count(name)) throw Error("override of unknown constant " + name);

    std::set<std::string> active;
    std::function<std::int64_t(const std::string&, const SourceSpan&)> value;
    std::function<std::int64_t(const Term&, const SourceSpan&)> expr = [&](const Term& t, const SourceSpan& sp) -> std::int64_t {
        if (auto* i = std::get_if<IntConst>(&t.node)) return i->value;
        if (auto* s = std::get_if<SymConst>(&t.node)) return value(s->name, sp);
        if (auto* e = std::get_if<ArithExpr>(&t.node)) {
            std::int64_t a = expr(e->args.at(0), sp);
            std::int64_t b = e->args.size() > 1 ? expr(e->args[1], sp) : 0;
            return arith(e->op, a, b, "constant expression");
        }
        throw Error("variable in declaration", sp);
    };
    value = [&](const std::string& name, const SourceSpan& sp) -> std::int64_t {
        if (auto it = out.constants.find(name); it != out.constants.end()) return it->second;
        auto d = defs.find(name);
        if (d == defs.end()) throw Error("reference to unknown constant " + name, sp);
        if (!active.insert(name).second) throw Error("cyclic constant definition involving " + name, d->second->span);
        std::int64_t v;
        if (auto o = overrides.find(name); o != overrides.end()) v = o->second;
        else v = expr(d->second->value, d->second->span);
        active.erase(name);
        out.constants[name] = v;
        return v;
    };
    for (const auto& c : decls.constants) value(c.name, c.span);

    for (const auto& d : decls.domains) {
        if (out.domains.count(d.name)) throw Error("domain " + d.name + " declared twice", d.span);
        std::int64_t lo = expr(d.lo, d.span);
        std::int64_t hi = expr(d.hi, d.span);
        if (lo > hi) throw Error("empty domain " + d.name + " (" + std::to_string(lo) + ".." + std::to_string(hi) + ")", d.span);
        if (hi - lo >= static_cast<std::int64_t>(kMaxGroundAtoms)) throw Error("domain " + d.name + " is too large", d.span);
        std::vector<Value> vals;
        for (std::int64_t v = lo; v <= hi; ++v) vals.emplace_back(v);
        out.domains[d.name] = std::move(vals);
    }
    return out;
}

BuiltinResult eval_builtin(const Builtin& lit, const Binding& binding, const DomainTable* table) {
    VarMap vm;
    for (const auto& [name, v] : binding) vm.slot(name);
    CBuiltin b = compile_builtin(lit, vm, table);
    Env env(vm.names.size());
    for (const auto& [name, v] : binding) {
        auto s = vm.slot(name);
        env.vals[s] = v;
        env.bound[s] = 1;
    }
    BuiltinResult res;
    if (env.all_bound(b.vars)) {
        res.kind = b.test(env) ? BuiltinResult::Kind::True : BuiltinResult::Kind::False;
        return res;
    }
    auto gen = b.generator_slot(env);
    if (!gen) {
        for (auto s : b.vars)
            if (!env.bound[s])
                throw Error("insufficiently instantiated: variable " + vm.names[s] + " in '" +
                            to_string(Literal::cmp(lit)) + "'");
    }
    res.kind = BuiltinResult::Kind::Bindings;
    b.generate(env, [&] {
        Binding ext = binding;
        ext[vm.names[*gen]] = env.vals[*gen];
        res.bindings.push_back(std::move(ext));
    });
    return res;
}

std::vector<AtomId> GroundTheory::candidates() const {
    std::vector<AtomId> out = universe;
    for (AtomId f : forced)
        if (!std::binary_search(universe.begin(), universe.end(), f, [&](AtomId a, AtomId b) { return atoms.less(a, b); }))
            out.push_back(f);
    std::sort(out.begin(), out.end(), [&](AtomId a, AtomId b) { return atoms.less(a, b); });
    return out;
}

std::string GroundTheory::str(const GroundClause& c) const {
    std::string s = atoms.str(c.head);
    if (c.pos.empty() && c.neg.empty()) return s + ".";
    s += " :- ";
    std::string p = join_atoms(atoms, c.pos, "");
    std::string n = join_atoms(atoms, c.neg, "not ");
    s += p;
    if (!p.empty() && !n.empty()) s += ", ";
    return s + n + ".";
}

std::string GroundTheory::str(const GroundConstraint& c) const {
    std::string s;
    for (std::size_t i = 0; i < c.heads.size(); ++i) {
        if (i) s += " ; ";
        if (!c.heads[i].positive) s += "not ";
        s += atoms.str(c.heads[i].atom);
    }
    if (c.heads.empty()) s = "false";
    s += " <- ";
    std::string p = join_atoms(atoms, c.pos, "");
    std::string n = join_atoms(atoms, c.neg, "not ");
    if (p.empty() && n.empty()) return s + "true.";
    s += p;
    if (!p.empty() && !n.empty()) s += ", ";
    return s + n + ".";
}

BaseFragment ground_base(const Program& program, const DomainTable& domains) {
    BaseFragment base;
    Grounder g(program, domains, base.atoms);
    g.add_domain_facts(base.clauses);
    std::vector<CRule> rules;
    for (const auto& c : program.definitions) {
        PredicateKey k{c.head.predicate, c.head.arity()};
        if (g.is_base(k)) rules.push_back(g.compile_clause(c));
    }
    g.ground_clauses(rules, base.clauses);
    base.possible = g.possible();
    base.model = well_founded(base.atoms.size(), base.clauses, {}).first;
    for (const auto& [k, kind] : g.classification())
        if (kind == PredicateKind::Defined && g.is_base(k)) base.predicates.push_back(k);
    return base;
}

std::vector<AtomId> abducible_universe(const Program& program, const DomainTable& domains, BaseFragment& base) {
    auto is_base = [&](const PredicateKey& k) {
        return std::find(base.predicates.begin(), base.predicates.end(), k) != base.predicates.end();
    };
    auto cls = classify_predicates(program);
    auto truth = [&](AtomId a) {
        return index(a) < base.model.size() ? base.model[a] : TruthValue::False;
    };

    std::vector<AtomId> out;
    for (const auto& decl : program.decls.abducibles) {
        std::vector<std::optional<std::vector<Value>>> cands(decl.arity);
        if (!decl.arg_types.empty()) {
            for (std::uint32_t i = 0; i < decl.arity; ++i) {
                const auto* d = domains.domain(decl.arg_types[i]);
                if (!d) throw Error("unknown domain " + decl.arg_types[i] + " in abducible declaration", decl.span);
                cands[i] = *d;
            }
        }
        else {
            for (const auto& c : program.constraints) {
                // Shape: d(Xi) <- p(X1,...,Xn) with distinct variables.
                if (c.heads.size() != 1 || c.body.size() != 1) continue;
                const Literal& h = c.heads[0];
                const Literal& b = c.body[0];
                if (h.kind != Literal::Kind::Positive || b.kind != Literal::Kind::Positive) continue;
                if (b.atom.predicate != decl.predicate || b.atom.arity() != decl.arity) continue;
                if (h.atom.arity() != 1 || !h.atom.args[0].is_var()) continue;
                std::vector<std::string> vars;
                bool distinct = true;
                for (const auto& t : b.atom.args) {
                    if (!t.is_var()) { distinct = false; break; }
                    for (const auto& v : vars)
                        if (v == t.as_var()->name) distinct = false;
                    vars.push_back(t.as_var()->name);
                }
                if (!distinct) continue;
                auto pos = std::find(vars.begin(), vars.end(), h.atom.args[0].as_var()->name);
                if (pos == vars.end()) continue;
                std::size_t i = static_cast<std::size_t>(pos - vars.begin());

                PredicateKey dk{h.atom.predicate, 1};
                auto kind = cls.find(dk);
                if (kind == cls.end() || kind->second != PredicateKind::Defined) continue;
                if (!is_base(dk))
                    throw Error("typing predicate " + dk.str() + " depends on an abducible", c.span);
                PredId dp = *base.atoms.find_predicate(dk.name, 1);
                std::vector<Value> ext;
                for (std::size_t ai = 0; ai < base.atoms.size(); ++ai) {
                    AtomId a = atom_id(static_cast<std::uint32_t>(ai));
                    if (base.atoms.atom(a).pred != dp) continue;
                    TruthValue tv = truth(a);
                    if (tv == TruthValue::Undefined)
                        throw Error("typing predicate " + dk.str() + " is not two-valued", c.span);
                    if (tv == TruthValue::True) ext.push_back(base.atoms.atom(a).args[0]);
                }
                std::sort(ext.begin(), ext.end());
                if (!cands[i]) cands[i] = std::move(ext);
                else {
                    std::vector<Value> both;
                    std::set_intersection(cands[i]->begin(), cands[i]->end(), ext.begin(), ext.end(), std::back_inserter(both));
                    cands[i] = std::move(both);
                }
            }
        }
        for (std::uint32_t i = 0; i < decl.arity; ++i)
            if (!cands[i])
                throw Error("unbounded abducible argument " + std::to_string(i + 1) + " of " + decl.predicate + "/" +
                                std::to_string(decl.arity) + " (declare its domain or add a typing constraint)",
                            decl.span);

        PredId p = base.atoms.predicate(decl.predicate, decl.arity, true);
        std::vector<Value> tuple(decl.arity);
        std::function<void(std::uint32_t)> cross = [&](std::uint32_t i) {
            if (i == decl.arity) {
                out.push_back(base.atoms.intern(p, tuple));
                return;
            }
            for (const auto& v : *cands[i]) {
                tuple[i] = v;
                cross(i + 1);
            }
        };
        cross(0);
        if (base.atoms.size() > kMaxGroundAtoms) throw Error("abducible universe is too large", decl.span);
    }
    std::sort(out.begin(), out.end(), [&](AtomId a, AtomId b) { return base.atoms.less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GroundTheory ground(const Program& program, const DomainTable& domains, BaseFragment base, std::vector<AtomId> universe) {
    GroundTheory th;
    th.atoms = std::move(base.atoms);
    th.universe = std::move(universe);
    th.sources = program.constraints;
    Grounder g(program, domains, th.atoms);
    auto less = [&](AtomId a, AtomId b) { return th.atoms.less(a, b); };

    // Forced abducibles: constraints of the shape `a <- true`.
    for (const auto& c : program.constraints) {
        if (!c.body.empty() || c.heads.size() != 1 || c.heads[0].kind != Literal::Kind::Positive) continue;
        const Atom& a = c.heads[0].atom;
        if (!program.decls.find_abducible(a.predicate, a.arity())) continue;
        CRule r = g.compile_constraint(c);
        Env env(r.nvars);
        th.forced.push_back(*g.ground_atom(r.heads[0], env, true));
    }
    std::sort(th.forced.begin(), th.forced.end(), less);
    th.forced.erase(std::unique(th.forced.begin(), th.forced.end()), th.forced.end());

    // Possible atoms: the non-false base atoms plus every candidate abducible.
    auto base_truth = [&](AtomId a) {
        return index(a) < base.model.size() ? base.model[a] : TruthValue::False;
    };
    for (AtomId a : base.possible.members())
        if (base_truth(a) != TruthValue::False) g.mark_possible(a, th.atoms.atom(a).pred);
    g.set_candidates(th.universe);
    g.set_candidates(th.forced);

    th.clauses = base.clauses;
    std::vector<CRule> rules;
    for (const auto& c : program.definitions) {
        PredicateKey k{c.head.predicate, c.head.arity()};
        if (!g.is_base(k)) rules.push_back(g.compile_clause(c));
    }
    std::vector<GroundClause> upper;
    g.ground_clauses(rules, upper);

    auto is_base_atom = [&](AtomId a) { return g.is_base(th.atoms.atom(a).pred); };
    auto possible = [&](AtomId a) {
        if (th.atoms.is_abducible(a)) return g.candidate(a);
        if (is_base_atom(a)) return base_truth(a) != TruthValue::False;
        return g.possible().contains(a);
    };
    // Truth of atoms whose value is fixed independently of the abducibles.
    auto fixed = [&](AtomId a) -> std::optional<bool> {
        if (!possible(a)) return false;
        if (is_base_atom(a)) {
            TruthValue t = base_truth(a);
            if (t != TruthValue::Undefined) return t == TruthValue::True;
        }
        return std::nullopt;
    };

    for (auto& c : upper) {
        GroundClause s{c.head, {}, {}};
        bool keep = true;
        for (AtomId a : c.pos) {
            auto v = fixed(a);
            if (v && !*v) { keep = false; break; }
            if (!v) s.pos.push_back(a);
        }
        for (AtomId a : c.neg) {
            if (!keep) break;
            auto v = fixed(a);
            if (v && *v) { keep = false; break; }
            if (!v) s.neg.push_back(a);
        }
        if (keep) th.clauses.push_back(std::move(s));
    }

    std::unordered_set<GroundConstraint, PairHash, ConstraintKey> seen;
    for (std::uint32_t ci = 0; ci < program.constraints.size(); ++ci) {
        CRule r = g.compile_constraint(program.constraints[ci]);
        g.run(r, [&](const Env& env, const std::vector<AtomId>& pos, const std::vector<AtomId>& neg) {
            GroundConstraint gc;
            gc.origin = ci;
            for (AtomId a : pos) {
                auto v = fixed(a);
                if (v && !*v) return;
                if (!v) gc.pos.push_back(a);
            }
            for (AtomId a : neg) {
                auto v = fixed(a);
                if (v && *v) return;
                if (!v) gc.neg.push_back(a);
            }
            for (const auto& h : r.heads) {
                if (h.kind == Literal::Kind::Builtin) {
                    if (h.builtin.test(env)) return;
                    continue;
                }
                auto a = g.ground_atom(h, env, false);
                std::optional<bool> v = a ? fixed(*a) : std::optional<bool>(false);
                bool positive = h.kind == Literal::Kind::Positive;
                if (v) {
                    if (*v == positive) return;
                    continue;
                }
                gc.heads.push_back({*a, positive});
            }
            if (seen.insert(gc).second) th.constraints.push_back(std::move(gc));
        });
    }

    th.stratified = locally_stratified(th.atoms.size(), th.clauses);
    return th;
}

GroundTheory ground_program(const Program& program, const ConstantOverrides& overrides) {
    DomainTable dt = eval_declarations(program.decls, overrides);
    BaseFragment base = ground_base(program, dt);
    std::vector<AtomId> universe = abducible_universe(program, dt, base);
    return ground(program, dt, std::move(base), std::move(universe));
}

std::string dump(const GroundTheory& th) {
    std::ostringstream out;
    out << "% atoms " << th.atoms.size() << ", universe " << th.universe.size() << ", forced " << th.forced.size()
        << ", clauses " << th.clauses.size() << ", constraints " << th.constraints.size()
        << (th.stratified ? ", stratified" : ", not stratified") << '\n';
    out << "% universe\n";
    for (AtomId a : th.universe) out << "abducible " << th.atoms.str(a) << ".\n";
    out << "% forced\n";
    for (AtomId a : th.forced) out << "forced " << th.atoms.str(a) << ".\n";
    out << "% definitions\n";
    for (const auto& c : th.clauses) out << th.str(c) << '\n';
    out << "% constraints\n";
    for (const auto& c : th.constraints) out << th.str(c) << '\n';
    return out.str();
}

} // namespace alp
