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

#include <alp/wfs.hpp>

namespace alp {

WellFoundedEvaluator::WellFoundedEvaluator(std::size_t atoms, std::span<const GroundClause> clauses)
    : atoms_(atoms), clauses_(clauses), occ_begin_(atoms + 1, 0) {
    for (const auto& c : clauses_)
        for (AtomId a : c.pos) ++occ_begin_[index(a) + 1];
    for (std::size_t i = 0; i < atoms; ++i) occ_begin_[i + 1] += occ_begin_[i];
    occ_.resize(occ_begin_.back());
    std::vector<std::uint32_t> fill(occ_begin_.begin(), occ_begin_.end() - 1);
    for (std::uint32_t ci = 0; ci < clauses_.size(); ++ci) {
        const auto& c = clauses_[ci];
        if (c.pos.empty()) unit_clauses_.push_back(ci);
        for (AtomId a : c.pos) occ_[fill[index(a)]++] = ci;
    }
}

AtomSet WellFoundedEvaluator::reduct_model(std::span<const AtomId> facts, const AtomSet* assumed) const {
    AtomSet model(atoms_);
    std::vector<AtomId> queue;
    queue.reserve(atoms_);
    auto derive = [&](AtomId a) {
        if (model.insert(a)) queue.push_back(a);
    };
    auto blocked = [&](const GroundClause& c) {
        if (!assumed) return false;
        for (AtomId n : c.neg)
            if (assumed->contains(n)) return true;
        return false;
    };

    std::vector<std::uint32_t> missing(clauses_.size());
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        missing[i] = blocked(clauses_[i]) ? UINT32_MAX : static_cast<std::uint32_t>(clauses_[i].pos.size());
    for (AtomId f : facts) derive(f);
    for (std::uint32_t ci : unit_clauses_)
        if (missing[ci] == 0) derive(clauses_[ci].head);

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        AtomId a = queue[qi];
        for (std::uint32_t k = occ_begin_[index(a)]; k < occ_begin_[index(a) + 1]; ++k) {
            std::uint32_t ci = occ_[k];
            if (missing[ci] != UINT32_MAX && --missing[ci] == 0) derive(clauses_[ci].head);
        }
    }
    return model;
}

std::pair<Interpretation, FixpointTrace> WellFoundedEvaluator::evaluate(std::span<const AtomId> facts) const {
    FixpointTrace trace;
    AtomSet under(atoms_);
    AtomSet over;
    for (;;) {
        over = reduct_model(facts, &under);
        AtomSet next = reduct_model(facts, &over);
        ++trace.iterations;
        trace.under.push_back(next.size());
        trace.over.push_back(over.size());
        // The underestimate only grows, so equal size means equal set.
        bool done = next.size() == under.size();
        under = std::move(next);
        if (done) break;
    }
    Interpretation model(atoms_, TruthValue::False);
    for (std::size_t i = 0; i < atoms_; ++i) {
        AtomId a = atom_id(static_cast<std::uint32_t>(i));
        if (under.contains(a)) model.set(a, TruthValue::True);
        else if (over.contains(a)) model.set(a, TruthValue::Undefined);
    }
    return {std::move(model), std::move(trace)};
}

AtomSet least_model(std::size_t atoms, std::span<const GroundClause> clauses, std::span<const AtomId> facts) {
    return WellFoundedEvaluator(atoms, clauses).reduct_model(facts, nullptr);
}

std::pair<Interpretation, FixpointTrace> well_founded(std::size_t atoms, std::span<const GroundClause> clauses,
                                                       std::span<const AtomId> facts) {
    return WellFoundedEvaluator(atoms, clauses).evaluate(facts);
}

TwoValuedness is_two_valued(const Interpretation& model) {
    TwoValuedness res;
    res.undefined = model.with_value(TruthValue::Undefined);
    res.two_valued = res.undefined.empty();
    return res;
}

} // namespace alp
